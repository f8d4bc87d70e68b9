#pragma once

#include <span>
#include <vector>

#include "ennorm/polynomial.hpp"

namespace ennorm {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per basis element
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[k]*basis[k] + remainder, where no
/// term of the remainder is divisible by any basis leading monomial.
/// Deterministic: terms are reduced largest-first, divisors tried in sequence
/// order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis,
                      const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Reduced Groebner basis (monic, auto-reduced, sorted by decreasing leading
/// monomial). Buchberger's algorithm with the product and chain criteria;
/// S-pairs are processed in increasing (lcm degree, pair index) order.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

}  // namespace ennorm
