#pragma once

#include <vector>

#include "ennorm/monomial.hpp"

namespace ennorm {

/// Hilbert series of a graded quotient ring, stored as numerator/(1-t)^e with
/// all common (1-t) factors cancelled. A zero denominator exponent means the
/// series is a polynomial (finite-dimensional quotient).
struct HilbertSeries {
  std::vector<long long> numerator;  // numerator[k] = coefficient of t^k
  int denom_exp = 0;

  /// Value of the Hilbert function at degree n (coefficient of t^n).
  long long coefficient(int n) const;

  bool is_polynomial() const { return denom_exp == 0; }

  /// Sum of all coefficients of a polynomial series.
  long long total() const;

  /// series - other, cancelled. Used for graded quotient dimensions.
  HilbertSeries minus(const HilbertSeries& other) const;

  static HilbertSeries from_raw(std::vector<long long> numerator, int denom_exp);
};

/// Hilbert series of k[z1..zd]/M for a monomial ideal M (pivot-splitting
/// recursion on the minimal generators).
HilbertSeries hilbert_series_monomial(std::vector<Monomial> gens, int num_vars);

}  // namespace ennorm
