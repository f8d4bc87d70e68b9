#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ennorm/decompose.hpp"

namespace ennorm {

/// J_u: generated by { conj(u_i) z_i - conj(u_j) z_j : i < j in Lambda };
/// the zero ideal when |Lambda| = 1.
Ideal j_ideal(const Line& u);

struct QuasiPrimeClass {
  enum class Kind { QuasiPrime, EssentiallyQuasiPrime, NotEssentiallyQuasiPrime };
  Kind kind = Kind::QuasiPrime;
  long long dim = 0;  // dim sqrt(I)/I' when finite
  Ideal iprime;       // component + J_u
  Ideal radical;      // the line prime

  std::string str() const;
};

/// Classifies a component from the Hilbert function of ring/I' against the
/// constant-1 Hilbert function of the line's coordinate ring.
QuasiPrimeClass quasi_prime_classification(const PrimaryComponent& c);

struct AnalysisReport {
  enum class Verdict { EssentiallyNormal, NotEssentiallyNormal, FiniteDimensional, Unsupported };
  Verdict verdict = Verdict::Unsupported;
  std::string reason;

  int dimension = -1;  // dimension of the affine cone
  std::vector<Line> lines;
  ConditionAResult condition_a;
  std::vector<PrimaryComponent> components;
  std::vector<QuasiPrimeClass> classes;  // parallel to components
  long long embedded_defect = 0;
  bool defect_discarded = false;  // embedded origin part excluded from verdict

  std::string verdict_str() const;
};

/// Raised for inputs outside the decision procedure's domain (non-homogeneous,
/// zero or unit ideals).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The full decision pipeline: dimension fast-fail, line extraction,
/// Condition A, per-component quasi-prime classification.
AnalysisReport essential_normality_verdict(const Ideal& a);

}  // namespace ennorm
