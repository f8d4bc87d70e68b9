#include "ennorm/report_json.hpp"

#include <json.hpp>

namespace ennorm {

namespace {

using nlohmann::json;

json line_to_json(const Line& l) {
  json j;
  j["exact"] = l.exact;
  json dir = json::array();
  if (l.exact) {
    for (const auto& c : l.direction) dir.push_back(c.str());
  } else {
    char buf[64];
    for (const auto& z : l.direction_num) {
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
      dir.push_back(std::string(buf));
    }
    j["eps"] = l.eps;
  }
  j["direction"] = dir;
  json lam = json::array();
  for (int k : l.lambda) lam.push_back(k + 1);  // 1-based in reports
  j["lambda"] = lam;
  return j;
}

json ideal_gens_json(const Ideal& a) {
  json out = json::array();
  if (!a.is_zero_ideal())
    for (const auto& g : a.groebner_basis()) out.push_back(g.str());
  return out;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, const IdealFile& source,
                           double total_ms, int indent) {
  json j;
  j["schema_version"] = 1;
  j["name"] = source.name;
  j["num_vars"] = source.num_vars;
  if (source.weight.kind() == WeightScheme::Kind::Hardy) {
    j["weight"] = {{"kind", "hardy"}};
  } else {
    j["weight"] = {{"kind", "bergman"}, {"s", source.weight_s_text}};
  }

  j["verdict"] = {{"kind", rep.verdict_str()}, {"reason", rep.reason}};
  j["dimension"] = rep.dimension;

  json lines = json::array();
  for (const auto& l : rep.lines) lines.push_back(line_to_json(l));
  j["lines"] = lines;

  json cond;
  cond["holds"] = rep.condition_a.holds;
  if (rep.condition_a.witness) {
    const auto& w = *rep.condition_a.witness;
    json sub_i = json::array(), sub_j = json::array();
    for (const auto& c : w.sub_i) sub_i.push_back(c.str());
    for (const auto& c : w.sub_j) sub_j.push_back(c.str());
    cond["witness"] = {{"line_i", w.line_i},
                       {"line_j", w.line_j},
                       {"sub_i", sub_i},
                       {"sub_j", sub_j}};
  }
  j["condition_a"] = cond;

  json comps = json::array();
  for (size_t k = 0; k < rep.components.size(); ++k) {
    json c;
    c["line"] = static_cast<int>(k);
    c["generators"] = ideal_gens_json(rep.components[k].component);
    c["prime"] = ideal_gens_json(rep.components[k].prime);
    if (k < rep.classes.size()) {
      const auto& cls = rep.classes[k];
      json cj;
      switch (cls.kind) {
        case QuasiPrimeClass::Kind::QuasiPrime: cj["kind"] = "QuasiPrime"; break;
        case QuasiPrimeClass::Kind::EssentiallyQuasiPrime:
          cj["kind"] = "EssentiallyQuasiPrime";
          cj["dim"] = cls.dim;
          break;
        case QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime:
          cj["kind"] = "NotEssentiallyQuasiPrime";
          break;
      }
      cj["iprime"] = ideal_gens_json(cls.iprime);
      c["class"] = cj;
    }
    comps.push_back(c);
  }
  j["components"] = comps;
  j["embedded_defect"] = rep.embedded_defect;
  j["flags"] = {{"defect_discarded", rep.defect_discarded}};
  j["timings_ms"] = {{"total", total_ms}};

  return j.dump(indent) + "\n";
}

}  // namespace ennorm
