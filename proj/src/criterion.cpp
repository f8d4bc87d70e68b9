#include "ennorm/criterion.hpp"

namespace ennorm {

Ideal j_ideal(const Line& u) {
  if (!u.exact) throw std::invalid_argument("j_ideal needs an exact line");
  int d = u.num_vars();
  std::vector<Polynomial> gens;
  const auto& lam = u.lambda;
  for (size_t p = 0; p < lam.size(); ++p)
    for (size_t q = p + 1; q < lam.size(); ++q) {
      int i = lam[p], j = lam[q];
      gens.push_back(Polynomial::variable(d, i).scaled(u.direction[i].conj()) -
                     Polynomial::variable(d, j).scaled(u.direction[j].conj()));
    }
  return Ideal(d, std::move(gens));
}

std::string QuasiPrimeClass::str() const {
  switch (kind) {
    case Kind::QuasiPrime: return "QuasiPrime";
    case Kind::EssentiallyQuasiPrime:
      return "EssentiallyQuasiPrime(" + std::to_string(dim) + ")";
    case Kind::NotEssentiallyQuasiPrime: return "NotEssentiallyQuasiPrime";
  }
  return "?";
}

QuasiPrimeClass quasi_prime_classification(const PrimaryComponent& c) {
  QuasiPrimeClass out;
  out.iprime = ideal_sum(c.component, j_ideal(c.line));
  out.radical = c.prime;

  // The line's coordinate ring has Hilbert function constantly 1, so
  // dim sqrt(I)/I' = sum over n of (HF(ring/I', n) - 1); the sum is finite
  // exactly when the series minus 1/(1-t) is a polynomial.
  HilbertSeries hs = hilbert_series(out.iprime);
  HilbertSeries line_series = HilbertSeries::from_raw({1}, 1);  // 1/(1-t)
  HilbertSeries diff = hs.minus(line_series);
  if (!diff.is_polynomial()) {
    out.kind = QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime;
    return out;
  }
  long long dim = diff.total();
  if (dim < 0) throw std::logic_error("I' Hilbert function below the line's");
  out.dim = dim;
  out.kind = dim == 0 ? QuasiPrimeClass::Kind::QuasiPrime
                      : QuasiPrimeClass::Kind::EssentiallyQuasiPrime;
  return out;
}

std::string AnalysisReport::verdict_str() const {
  switch (verdict) {
    case Verdict::EssentiallyNormal: return "EssentiallyNormal";
    case Verdict::NotEssentiallyNormal: return "NotEssentiallyNormal";
    case Verdict::FiniteDimensional: return "FiniteDimensional";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

AnalysisReport essential_normality_verdict(const Ideal& a) {
  if (!a.is_homogeneous()) throw InputError("ideal is not homogeneous");
  if (a.is_zero_ideal()) throw InputError("zero ideal");

  AnalysisReport rep;
  KrullDimension kd = krull_dimension(a);
  if (kd.empty_variety) throw InputError("unit ideal (empty variety)");
  rep.dimension = kd.dim;

  if (kd.dim == 0) {
    rep.verdict = AnalysisReport::Verdict::FiniteDimensional;
    rep.reason = "quotient module is finite-dimensional";
    return rep;
  }
  if (kd.dim >= 2) {
    rep.verdict = AnalysisReport::Verdict::NotEssentiallyNormal;
    rep.reason = "variety dimension " + std::to_string(kd.dim) + " >= 2";
    return rep;
  }

  LineExtraction ext = extract_lines(a);
  rep.lines = ext.lines;
  if (!ext.all_exact || !ext.complete_certified) {
    rep.verdict = AnalysisReport::Verdict::Unsupported;
    rep.reason = "numeric-lines: " + (ext.note.empty() ? std::string("line directions are not Gaussian-rational") : ext.note);
    return rep;
  }

  rep.condition_a = condition_A(rep.lines);
  if (!rep.condition_a.holds) {
    const auto& w = *rep.condition_a.witness;
    rep.verdict = AnalysisReport::Verdict::NotEssentiallyNormal;
    rep.reason = "Condition A fails for lines " + rep.lines[w.line_i].str() + " and " +
                 rep.lines[w.line_j].str();
    return rep;
  }

  rep.components = isolated_primary_components(a, rep.lines);
  rep.embedded_defect = embedded_defect(a, rep.components);
  rep.defect_discarded = rep.embedded_defect > 0;

  bool all_eqp = true;
  for (const auto& comp : rep.components) {
    rep.classes.push_back(quasi_prime_classification(comp));
    if (rep.classes.back().kind == QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime) {
      all_eqp = false;
      rep.reason = "component at line " + comp.line.str() +
                   " is not essentially quasi-prime (dim sqrt(I)/I' infinite)";
    }
  }
  rep.verdict = all_eqp ? AnalysisReport::Verdict::EssentiallyNormal
                        : AnalysisReport::Verdict::NotEssentiallyNormal;
  return rep;
}

}  // namespace ennorm
