// Command-line driver: exact essential-normality analysis and the numerical
// operator lab for homogeneous quotient modules over the polydisc.

#include <CLI11.hpp>
#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "ennorm/criterion.hpp"
#include "ennorm/oplab.hpp"
#include "ennorm/parser.hpp"
#include "ennorm/report_json.hpp"

using namespace ennorm;
using Cplx = std::complex<double>;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsupported = 1;
constexpr int kExitInputError = 2;

struct CsvRow {
  std::string experiment;
  std::string ideal;
  double parameter;
  double value;
};

void emit_csv(const std::string& path, std::vector<CsvRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    if (a.experiment != b.experiment) return a.experiment < b.experiment;
    return a.parameter < b.parameter;
  });
  std::string out = "experiment,ideal,parameter,value\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.12g,%.12g\n", r.experiment.c_str(), r.ideal.c_str(),
                  r.parameter, r.value);
    out += buf;
  }
  if (path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << out;
  }
}

Cplx parse_complex_entry(const std::string& text) {
  try {
    return GaussianRational::parse(text).to_complex();
  } catch (const std::exception&) {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad coordinate '" + text + "'");
    return Cplx(v, 0);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string line_text(const Line& l) {
  return l.str() + (l.exact ? "" : " (numeric)");
}

int run_analyze(const std::string& path, const std::string& json_path) {
  IdealFile file = load_ideal_file(path);
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep = essential_normality_verdict(file.ideal());
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();

  std::cout << "ideal: " << file.name << "  (" << file.num_vars << " variables, weight "
            << file.weight.str() << ")\n";
  std::cout << "verdict: " << rep.verdict_str() << "\n";
  if (!rep.reason.empty()) std::cout << "reason: " << rep.reason << "\n";
  std::cout << "dimension: " << rep.dimension << "\n";
  if (!rep.lines.empty()) {
    std::cout << "lines:\n";
    for (const auto& l : rep.lines) {
      std::cout << "  " << line_text(l) << "  Lambda = {";
      for (size_t k = 0; k < l.lambda.size(); ++k)
        std::cout << (k ? ", " : "") << l.lambda[k] + 1;
      std::cout << "}\n";
    }
  }
  if (rep.dimension == 1 && rep.verdict != AnalysisReport::Verdict::Unsupported)
    std::cout << "condition A: " << (rep.condition_a.holds ? "holds" : "fails") << "\n";
  for (size_t k = 0; k < rep.classes.size(); ++k)
    std::cout << "component[" << k << "] at line " << rep.components[k].line.str() << ": "
              << rep.classes[k].str() << "\n";
  if (rep.embedded_defect > 0)
    std::cout << "embedded defect at the origin: " << rep.embedded_defect
              << " (discarded for the verdict)\n";

  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + json_path + "'");
    f << report_to_json(rep, file, ms);
  }
  return rep.verdict == AnalysisReport::Verdict::Unsupported ? kExitUnsupported : kExitOk;
}

int run_commutators(const std::string& path, const std::string& pair, int max_degree, int width,
                    const std::string& csv) {
  IdealFile file = load_ideal_file(path);
  auto parts = split(pair, ',');
  if (parts.size() != 2) throw std::invalid_argument("--pair expects i,j");
  int i = std::stoi(parts[0]) - 1;
  int j = std::stoi(parts[1]) - 1;
  if (i < 0 || j < 0 || i >= file.num_vars || j >= file.num_vars)
    throw std::invalid_argument("--pair indices out of range");

  GradedBasis basis(file.ideal(), max_degree, file.weight);
  CompressionMatrices cm = compression_matrices(basis);
  std::vector<WindowSpec> windows;
  for (int n = 0; n + width <= max_degree - 1; ++n) windows.push_back({n, width});
  auto norms = commutator_tail_norms(cm, i, j, windows);

  std::vector<CsvRow> rows;
  for (size_t k = 0; k < windows.size(); ++k)
    rows.push_back({"commutator_tail", file.name, double(windows[k].start), norms[k]});
  emit_csv(csv, std::move(rows));
  return kExitOk;
}

int run_berezin(const std::string& path, const std::string& f_text, const std::string& ray_text,
                const std::string& radii_text, const std::string& csv) {
  IdealFile file = load_ideal_file(path);
  Polynomial f = parse_polynomial(f_text, file.num_vars);
  std::vector<Cplx> ray;
  for (const auto& tok : split(ray_text, ',')) ray.push_back(parse_complex_entry(tok));
  std::vector<double> radii;
  for (const auto& tok : split(radii_text, ',')) radii.push_back(std::stod(tok));

  GradedBasis basis(file.ideal(), std::max(4, f.degree() + 2), file.weight);
  BerezinCurve curve = berezin_commutator_curve(file.ideal(), f, ray, radii, basis);

  std::vector<CsvRow> rows;
  for (size_t k = 0; k < radii.size(); ++k)
    rows.push_back({"berezin", file.name, radii[k], curve.values[k]});
  emit_csv(csv, std::move(rows));
  std::cerr << "truncation degree: " << curve.truncation_degree << "\n";
  return kExitOk;
}

int run_index(const std::string& path, int component, int max_degree, const std::string& csv) {
  IdealFile file = load_ideal_file(path);
  Ideal a = file.ideal();
  LineExtraction ext = extract_lines(a);
  if (!ext.all_exact || !ext.complete_certified) {
    std::cerr << "unsupported: line extraction is not exact\n";
    return kExitUnsupported;
  }
  auto comps = isolated_primary_components(a, ext.lines);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw std::invalid_argument("--component out of range (have " +
                                std::to_string(comps.size()) + ")");
  FredholmIndex fi = fredholm_index_estimate(comps[component].component,
                                             comps[component].line, max_degree, file.weight);
  std::vector<CsvRow> rows;
  for (size_t k = 0; k < fi.history.size(); ++k)
    rows.push_back({"fredholm_index", file.name, double(max_degree - 2 + k),
                    double(fi.history[k])});
  emit_csv(csv, std::move(rows));
  std::cout << "index: " << fi.index << (fi.stable ? " (stable)" : " (inconclusive)") << "\n";
  return fi.stable ? kExitOk : kExitUnsupported;
}

int run_spectrum(const std::string& path, const std::string& grid_path,
                 const std::string& window_text, const std::string& csv) {
  IdealFile file = load_ideal_file(path);
  WindowSpec window{1, 29};
  if (!window_text.empty()) {
    auto parts = split(window_text, ',');
    if (parts.size() != 2) throw std::invalid_argument("--window expects n,width");
    window.start = std::stoi(parts[0]);
    window.width = std::stoi(parts[1]);
  }

  std::ifstream gf(grid_path);
  if (!gf) throw std::runtime_error("cannot open '" + grid_path + "'");
  std::vector<std::vector<Cplx>> grid;
  std::string line;
  while (std::getline(gf, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    std::vector<Cplx> pt;
    for (const auto& tok : split(line, ',')) pt.push_back(parse_complex_entry(tok));
    if (static_cast<int>(pt.size()) != file.num_vars)
      throw std::invalid_argument("grid point dimension mismatch");
    grid.push_back(std::move(pt));
  }

  GradedBasis basis(file.ideal(), window.start + window.width + 1, file.weight);
  CompressionMatrices cm = compression_matrices(basis);
  auto probe = essential_spectrum_probe(cm, grid, window);

  std::vector<CsvRow> rows;
  for (size_t k = 0; k < probe.size(); ++k)
    rows.push_back({"spectrum_probe", file.name, double(k), probe[k]});
  emit_csv(csv, std::move(rows));
  return kExitOk;
}

int run_ao(const std::string& path_a, const std::string& path_b, int max_degree,
           const std::string& csv) {
  IdealFile fa = load_ideal_file(path_a);
  IdealFile fb = load_ideal_file(path_b);
  if (fa.num_vars != fb.num_vars) throw std::invalid_argument("variable counts differ");
  if (!(fa.weight == fb.weight)) throw std::invalid_argument("weights differ");

  std::vector<CsvRow> rows;
  Ideal a = fa.ideal(), b = fb.ideal();
  for (int n = 0; n + 3 <= max_degree; ++n) {
    double norm = asymptotic_orthogonality_norm(a, b, n, fa.weight);
    rows.push_back({"asymptotic_orthogonality", fa.name + "|" + fb.name, double(n), norm});
  }
  emit_csv(csv, std::move(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"essential normality of homogeneous quotient modules over the polydisc"};
  app.require_subcommand(1);

  std::string file, json_path, csv;
  auto* analyze = app.add_subcommand("analyze", "decide essential normality of [I]^perp");
  analyze->add_option("file", file, "ideal file")->required();
  analyze->add_option("--json", json_path, "write the JSON report here");

  auto* lab = app.add_subcommand("lab", "numerical operator experiments");
  lab->require_subcommand(1);

  std::string pair = "1,1", f_text, ray_text, radii_text, grid_path, window_text, file_b;
  int max_degree = 30, component = 0;
  int width = 3;

  auto* commutators = lab->add_subcommand("commutators", "windowed commutator tail norms");
  commutators->add_option("file", file)->required();
  commutators->add_option("--pair", pair, "variable pair i,j (1-based)")->required();
  commutators->add_option("--max-degree", max_degree)->required();
  commutators->add_option("--width", width, "window width (default 3)");
  commutators->add_option("--csv", csv);

  auto* berezin = lab->add_subcommand("berezin", "Berezin commutator curve along a variety ray");
  berezin->add_option("file", file)->required();
  berezin->add_option("--f", f_text, "symbol polynomial")->required();
  berezin->add_option("--ray", ray_text, "boundary direction c1,c2,...")->required();
  berezin->add_option("--radii", radii_text, "increasing radii r1,r2,...")->required();
  berezin->add_option("--csv", csv);

  auto* index = lab->add_subcommand("index", "Fredholm index estimate of S_h on a component");
  index->add_option("file", file)->required();
  index->add_option("--component", component, "component number (0-based)");
  index->add_option("--max-degree", max_degree)->required();
  index->add_option("--csv", csv);

  auto* spectrum = lab->add_subcommand("spectrum", "essential spectrum probe on a grid");
  spectrum->add_option("file", file)->required();
  spectrum->add_option("--grid-file", grid_path, "one point per line, comma-separated")
      ->required();
  spectrum->add_option("--window", window_text, "window n,width (default 1,29)");
  spectrum->add_option("--csv", csv);

  auto* ao = lab->add_subcommand("ao", "asymptotic orthogonality of two quotient modules");
  ao->add_option("fileA", file)->required();
  ao->add_option("fileB", file_b)->required();
  ao->add_option("--max-degree", max_degree)->required();
  ao->add_option("--csv", csv);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(file, json_path);
    if (*commutators) return run_commutators(file, pair, max_degree, width, csv);
    if (*berezin) return run_berezin(file, f_text, ray_text, radii_text, csv);
    if (*index) return run_index(file, component, max_degree, csv);
    if (*spectrum) return run_spectrum(file, grid_path, window_text, csv);
    if (*ao) return run_ao(file, file_b, max_degree, csv);
  } catch (const TruncationError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
