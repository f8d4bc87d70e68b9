#pragma once

#include <string>

#include "ennorm/monomial.hpp"

namespace ennorm {

/// Inner-product weights for the Hardy and weighted Bergman modules over the
/// polydisc: ||z^alpha||^2 = prod_i w(alpha_i) with w(n) = 1 (Hardy) or
/// w(n) = B(n+1, s+1) (Bergman with weight (1-|z|^2)^s, normalized area
/// measure).
class WeightScheme {
 public:
  enum class Kind { Hardy, Bergman };

  static WeightScheme hardy() { return WeightScheme(Kind::Hardy, 0.0); }
  static WeightScheme bergman(double s);

  Kind kind() const { return kind_; }
  double s() const { return s_; }

  /// One-variable factor w(n): positive and decreasing in n.
  double factor(int n) const;

  double monomial_norm_sq(const Monomial& alpha) const;
  double monomial_norm(const Monomial& alpha) const;

  std::string str() const;

  friend bool operator==(const WeightScheme& a, const WeightScheme& b) {
    return a.kind_ == b.kind_ && a.s_ == b.s_;
  }

 private:
  WeightScheme(Kind k, double s) : kind_(k), s_(s) {}
  Kind kind_;
  double s_;
};

}  // namespace ennorm
