#include "ennorm/variety.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ennorm/decompose.hpp"

namespace ennorm {

namespace {

using Cplx = std::complex<double>;

constexpr double kRootResidualTol = 1e-12;
constexpr double kRationalizeTol = 1e-9;
constexpr double kNumericLineEps = 1e-8;
constexpr long kHeightBound = 1000000;

// ---------------------------------------------------------------------------
// Univariate machinery (complex double coefficients).

void trim_poly(std::vector<Cplx>& c) {
  double scale = 0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= 1e-12 * scale) c.pop_back();
}

std::vector<Cplx> roots_of(std::vector<Cplx> c) {
  trim_poly(c);
  if (c.size() <= 1) return {};
  int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion);
  std::vector<Cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);

  // Newton polish per root.
  double scale = 0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  for (auto& r : roots) {
    for (int it = 0; it < 60; ++it) {
      Cplx p = 0, dp = 0;
      for (int k = n; k >= 0; --k) {
        dp = dp * r + p;
        p = p * r + c[k];
      }
      if (std::abs(p) <= kRootResidualTol * scale) break;
      if (std::abs(dp) == 0) break;
      r -= p / dp;
    }
  }
  return roots;
}

Cplx eval_poly(const std::vector<Cplx>& c, Cplx x) {
  Cplx p = 0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) p = p * x + c[k];
  return p;
}

// Continued-fraction reconstruction of a rational close to x. Tight matches
// are accepted directly; otherwise the best convergent within a loose bound is
// returned as a candidate (callers verify exactly, which makes this safe even
// when root refinement stalled on a multiple root).
std::optional<mpq_class> rationalize(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  constexpr double kLooseTol = 1e-4;
  long long p0 = 0, q0 = 1;  // h_{-2}/k_{-2}
  long long p1 = 1, q1 = 0;  // h_{-1}/k_{-1}
  double best_err = 1e300;
  long long best_p = 0, best_q = 0;
  double y = x;
  for (int it = 0; it < 40; ++it) {
    double fa = std::floor(y);
    if (fa > 1e15 || fa < -1e15) break;
    long long a = static_cast<long long>(fa);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > kHeightBound || std::llabs(p2) > 100 * kHeightBound) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (q1 > 0) {
      double approx = static_cast<double>(p1) / static_cast<double>(q1);
      double err = std::abs(x - approx);
      if (err < best_err) {
        best_err = err;
        best_p = p1;
        best_q = q1;
      }
      if (err <= kRationalizeTol) break;
    }
    double frac = y - fa;
    if (std::abs(frac) < 1e-15) break;
    y = 1.0 / frac;
  }
  if (best_q != 0 && best_err <= kLooseTol) {
    mpq_class q(static_cast<long>(best_p), static_cast<long>(best_q));
    q.canonicalize();
    return q;
  }
  return std::nullopt;
}

std::optional<GaussianRational> rationalize_complex(Cplx z) {
  auto re = rationalize(z.real());
  auto im = rationalize(z.imag());
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, *im);
}

// ---------------------------------------------------------------------------
// Zero-dimensional back-substitution over a lex basis.

// Substitutes values for variables > j; returns the univariate coefficient
// vector in variable j, or nullopt when the polynomial involves a variable
// earlier than j.
std::optional<std::vector<Cplx>> to_univariate(const Polynomial& g, int j,
                                               const std::vector<Cplx>& assigned, int num_vars) {
  std::vector<Cplx> c;
  for (const auto& [m, coef] : g.terms()) {
    for (int v = 0; v < j; ++v)
      if (m[v] > 0) return std::nullopt;
    Cplx val = coef.to_complex();
    for (int v = j + 1; v < num_vars; ++v)
      for (int k = 0; k < m[v]; ++k) val *= assigned[v];
    int e = m[j];
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, Cplx(0));
    c[e] += val;
  }
  return c;
}

struct SolveState {
  const std::vector<Polynomial>* basis = nullptr;
  int num_vars = 0;
  bool degenerate = false;  // a level had no usable univariate polynomial
  std::vector<std::vector<Cplx>> points;
};

void solve_level(SolveState& st, int j, std::vector<Cplx>& assigned) {
  if (j < 0) {
    st.points.push_back(assigned);
    return;
  }
  std::vector<std::vector<Cplx>> candidates;
  for (const auto& g : *st.basis) {
    auto uni = to_univariate(g, j, assigned, st.num_vars);
    if (!uni) continue;
    trim_poly(*uni);
    candidates.push_back(std::move(*uni));
  }
  const std::vector<Cplx>* best = nullptr;
  for (const auto& c : candidates) {
    if (c.size() <= 1) continue;  // constant or zero
    if (!best || c.size() < best->size()) best = &c;
  }
  if (!best) {
    // Either the branch is inconsistent (a nonzero constant survived) or the
    // variable is undetermined; the latter flags a degenerate chart.
    for (const auto& c : candidates)
      if (c.size() == 1 && std::abs(c[0]) > 1e-7) return;  // inconsistent branch
    st.degenerate = true;
    return;
  }
  double scale = 0;
  for (const auto& c : *best) scale = std::max(scale, std::abs(c));
  auto roots = roots_of(*best);
  // Deduplicate multiple roots.
  std::vector<Cplx> unique_roots;
  for (const auto& r : roots) {
    bool dup = false;
    for (const auto& u : unique_roots)
      if (std::abs(r - u) <= 1e-8 * std::max(1.0, std::abs(u))) dup = true;
    if (!dup) unique_roots.push_back(r);
  }
  for (const auto& r : unique_roots) {
    bool consistent = true;
    for (const auto& c : candidates) {
      double cscale = 0;
      for (const auto& v : c) cscale = std::max(cscale, std::abs(v));
      if (c.size() > 1 && std::abs(eval_poly(c, r)) > 1e-6 * std::max(1.0, cscale)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    assigned[j] = r;
    solve_level(st, j - 1, assigned);
  }
  assigned[j] = 0;
}

// Gauss-Newton polish of a chart point against all chart generators.
void refine_point(const std::vector<Polynomial>& gens, std::vector<Cplx>& x) {
  int m = static_cast<int>(x.size());
  int rows = static_cast<int>(gens.size());
  if (rows == 0 || m == 0) return;
  double scale = 1.0;
  for (const auto& g : gens)
    for (const auto& [mon, c] : g.terms()) scale = std::max(scale, std::abs(c.to_complex()));

  for (int it = 0; it < 40; ++it) {
    Eigen::VectorXcd f(rows);
    Eigen::MatrixXcd jac(rows, m);
    for (int r = 0; r < rows; ++r) {
      f(r) = gens[r].eval(std::span<const Cplx>(x));
      for (int v = 0; v < m; ++v) {
        // Analytic partial derivative.
        Cplx dv = 0;
        for (const auto& [mon, c] : gens[r].terms()) {
          if (mon[v] == 0) continue;
          Cplx t = c.to_complex() * static_cast<double>(mon[v]);
          for (int w = 0; w < m; ++w) {
            int e = mon[w] - (w == v ? 1 : 0);
            for (int k = 0; k < e; ++k) t *= x[w];
          }
          dv += t;
        }
        jac(r, v) = dv;
      }
    }
    if (f.norm() <= kRootResidualTol * scale) return;
    Eigen::VectorXcd delta = jac.colPivHouseholderQr().solve(-f);
    if (!delta.allFinite()) return;
    for (int v = 0; v < m; ++v) x[v] += delta(v);
    if (delta.norm() < 1e-15) return;
  }
}

std::string gr_vec_str(const std::vector<GaussianRational>& v) {
  std::string s;
  for (const auto& c : v) {
    s += c.str();
    s += ";";
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Line::canonical_key() const {
  if (exact) return "E:" + gr_vec_str(direction);
  std::string s = "N:";
  char buf[64];
  auto snap = [](double v) { return std::abs(v) < 5e-8 ? 0.0 : v; };
  for (const auto& z : direction_num) {
    std::snprintf(buf, sizeof buf, "%.7f%+.7f;", snap(z.real()), snap(z.imag()));
    s += buf;
  }
  return s;
}

std::string Line::str() const {
  std::string s = "(";
  for (size_t i = 0; i < direction_num.size(); ++i) {
    if (i) s += ", ";
    if (exact) {
      s += direction[i].str();
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", direction_num[i].real(),
                    direction_num[i].imag());
      s += buf;
    }
  }
  return s + ")";
}

Line normalize_direction(std::span<const GaussianRational> v) {
  mpq_class max_sq(0);
  int pivot = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    mpq_class n = v[i].norm_sq();
    if (n > max_sq) {
      max_sq = n;
      pivot = static_cast<int>(i);
    }
  }
  if (pivot < 0) throw std::invalid_argument("zero direction vector");

  Line line;
  line.exact = true;
  GaussianRational inv = v[pivot].inverse();
  for (const auto& c : v) line.direction.push_back(c * inv);
  for (size_t i = 0; i < v.size(); ++i) {
    line.direction_num.push_back(line.direction[i].to_complex());
    if (line.direction[i].norm_sq() == 1) line.lambda.push_back(static_cast<int>(i));
  }
  return line;
}

Line normalize_direction_numeric(std::span<const std::complex<double>> v, double eps) {
  double max_mod = 0;
  for (const auto& z : v) max_mod = std::max(max_mod, std::abs(z));
  if (max_mod == 0) throw std::invalid_argument("zero direction vector");
  int pivot = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) >= max_mod * (1 - 1e-12)) {
      pivot = static_cast<int>(i);
      break;
    }
  Line line;
  line.exact = false;
  line.eps = eps;
  Cplx inv = 1.0 / v[pivot];
  for (const auto& z : v) line.direction_num.push_back(z * inv);
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(std::abs(line.direction_num[i]) - 1.0) <= eps)
      line.lambda.push_back(static_cast<int>(i));
  return line;
}

LineExtraction extract_lines(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("extract_lines needs a homogeneous ideal");
  KrullDimension kd = krull_dimension(a);
  if (kd.empty_variety || kd.dim != 1)
    throw std::invalid_argument("extract_lines needs a one-dimensional variety");

  int d = a.num_vars();
  LineExtraction out;
  std::map<std::string, Line> found;  // canonical key -> line
  bool any_degenerate = false;

  for (int chart = 0; chart < d; ++chart) {
    // Dehomogenize at z_chart = 1.
    std::vector<Polynomial> chart_gens;
    bool inconsistent = false;
    for (const auto& g : a.gens()) {
      Polynomial h = g.dehomogenize(chart);
      if (h.is_zero()) continue;
      if (h.is_constant()) {
        inconsistent = true;  // nonzero constant: no solutions in this chart
        break;
      }
      chart_gens.push_back(h);
    }
    if (inconsistent) continue;
    int m = d - 1;
    std::vector<std::vector<Cplx>> points;
    if (m == 0) {
      points.push_back({});  // the single point of the 0-variable chart
    } else if (chart_gens.empty()) {
      any_degenerate = true;  // positive-dimensional chart; cannot happen at dim 1
      continue;
    } else {
      auto lex_gb = buchberger(chart_gens, MonomialOrder::lex());
      if (lex_gb.size() == 1 && lex_gb[0].is_constant()) continue;  // empty chart
      SolveState st;
      st.basis = &lex_gb;
      st.num_vars = m;
      std::vector<Cplx> assigned(m, Cplx(0));
      solve_level(st, m - 1, assigned);
      if (st.degenerate) any_degenerate = true;
      points = std::move(st.points);
      for (auto& p : points) refine_point(chart_gens, p);
    }

    for (const auto& p : points) {
      // Assemble the full direction with 1 in the chart slot.
      std::vector<Cplx> dir_num;
      dir_num.reserve(d);
      for (int i = 0, k = 0; i < d; ++i)
        dir_num.push_back(i == chart ? Cplx(1) : p[k++]);

      // Rationalize and verify exactly.
      std::vector<GaussianRational> dir_exact;
      bool exact_ok = true;
      for (const auto& z : dir_num) {
        auto q = rationalize_complex(z);
        if (!q) {
          exact_ok = false;
          break;
        }
        dir_exact.push_back(*q);
      }
      if (exact_ok) {
        for (const auto& g : a.gens())
          if (!g.eval(std::span<const GaussianRational>(dir_exact)).is_zero()) {
            exact_ok = false;
            break;
          }
      }
      Line line = exact_ok ? normalize_direction(dir_exact)
                           : normalize_direction_numeric(dir_num, kNumericLineEps);
      found.emplace(line.canonical_key(), std::move(line));
    }
  }

  // Collect, preferring exact over numerically-equal duplicates.
  std::vector<Line> exact_lines, numeric_lines;
  for (auto& [key, line] : found)
    (line.exact ? exact_lines : numeric_lines).push_back(std::move(line));
  for (const auto& nl : numeric_lines) {
    bool dup = false;
    for (const auto& el : exact_lines) {
      double dist = 0;
      for (int i = 0; i < d; ++i)
        dist = std::max(dist, std::abs(nl.direction_num[i] - el.direction_num[i]));
      if (dist <= 1e-6) dup = true;
    }
    if (!dup) {
      out.lines.push_back(nl);
      out.all_exact = false;
    }
  }
  for (auto& el : exact_lines) out.lines.push_back(std::move(el));
  std::sort(out.lines.begin(), out.lines.end(),
            [](const Line& x, const Line& y) { return x.canonical_key() < y.canonical_key(); });

  if (any_degenerate) {
    out.all_exact = false;
    out.note = "degenerate chart solve";
  }
  if (out.lines.empty()) {
    out.all_exact = false;
    out.note = "no lines recovered from a one-dimensional variety";
    return out;
  }

  // Completeness certificate: the intersection of the line primes must lie in
  // the radical of a.
  if (out.all_exact) {
    Ideal primes_meet = line_prime(out.lines[0]);
    for (size_t k = 1; k < out.lines.size(); ++k)
      primes_meet = ideal_intersect(primes_meet, line_prime(out.lines[k]));
    out.complete_certified = true;
    for (const auto& g : primes_meet.gens())
      if (!radical_membership(g, a)) {
        out.complete_certified = false;
        out.note = "completeness certificate failed";
        break;
      }
  }
  return out;
}

ConditionAResult condition_A(std::span<const Line> lines) {
  for (const auto& l : lines)
    if (!l.exact) throw std::invalid_argument("condition_A needs exact lines");

  ConditionAResult res;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].lambda != lines[j].lambda) continue;
      const auto& lam = lines[i].lambda;
      // Dependent iff all 2x2 minors of the Lambda-subvectors vanish.
      bool dependent = true;
      for (size_t p = 0; p < lam.size() && dependent; ++p)
        for (size_t q = p + 1; q < lam.size() && dependent; ++q) {
          GaussianRational minor = lines[i].direction[lam[p]] * lines[j].direction[lam[q]] -
                                   lines[i].direction[lam[q]] * lines[j].direction[lam[p]];
          if (!minor.is_zero()) dependent = false;
        }
      if (lam.size() == 1) dependent = true;  // single coordinate: always dependent
      if (dependent) {
        ConditionAResult::Witness w;
        w.line_i = static_cast<int>(i);
        w.line_j = static_cast<int>(j);
        for (int k : lam) {
          w.sub_i.push_back(lines[i].direction[k]);
          w.sub_j.push_back(lines[j].direction[k]);
        }
        res.holds = false;
        res.witness = std::move(w);
        return res;
      }
    }
  }
  return res;
}

}  // namespace ennorm
