#include <doctest.h>

#include <random>

#include "ennorm/groebner.hpp"

using namespace ennorm;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }

Polynomial random_poly(std::mt19937& rng, int nv, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<long> c(-3, 3);
  Polynomial p(nv);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(nv, 0);
    int budget = e(rng);
    for (int i = 0; i < nv && budget > 0; ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      exps[i] = part(rng);
      budget -= exps[i];
    }
    p.add_term(Monomial(exps), GaussianRational(c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("normal form basics") {
  MonomialOrder ord = MonomialOrder::grevlex();
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  std::vector<Polynomial> basis{z1 - z2, z3 * z3};

  CHECK(normal_form(Polynomial::zero(nv), basis, ord).is_zero());
  CHECK(normal_form(basis[0], {basis.begin(), basis.begin() + 1}, ord).is_zero());

  // Hand long division: z1^2 z2 reduces to z2^3 against {z1-z2, z3^2}.
  Polynomial f = z1 * z1 * z2;
  CHECK(normal_form(f, basis, ord) == z2 * z2 * z2);
}

TEST_CASE("division correctness on random inputs") {
  MonomialOrder ord = MonomialOrder::grevlex();
  std::mt19937 rng(23);
  int nv = 3;
  for (int k = 0; k < 60; ++k) {
    Polynomial f = random_poly(rng, nv, 4, 5);
    std::vector<Polynomial> basis;
    for (int j = 0; j < 2; ++j) {
      Polynomial g = random_poly(rng, nv, 3, 3);
      if (!g.is_zero()) basis.push_back(g);
    }
    if (basis.empty()) continue;
    DivisionResult d = divide(f, basis, ord);
    Polynomial recomposed = d.remainder;
    for (size_t j = 0; j < basis.size(); ++j) recomposed += d.quotients[j] * basis[j];
    CHECK(recomposed == f);
    // No remainder term divisible by a basis leading monomial.
    for (const auto& [m, c] : d.remainder.terms())
      for (const auto& g : basis)
        CHECK(!g.leading_term(ord).first.divides(m));
    // f - remainder reduces to 0 against the basis.
    CHECK(normal_form(f - d.remainder, basis, ord).is_zero());
  }
}

TEST_CASE("buchberger on hand-checked instances") {
  MonomialOrder ord = MonomialOrder::grevlex();
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);

  auto gb1 = buchberger(std::vector<Polynomial>{z1}, ord);
  CHECK(gb1 == std::vector<Polynomial>{z1});

  // One S-polynomial by hand: S(z1-z2, z1z3) = z2z3.
  auto gb2 = buchberger(std::vector<Polynomial>{z1 - z2, z1 * z3, z3 * z3}, ord);
  CHECK(gb2 == std::vector<Polynomial>{z2 * z3, z3 * z3, z1 - z2});

  // z1^2 - z2^2 reduces to zero against z1 + z2.
  int nv2 = 2;
  Polynomial w1 = var(nv2, 0), w2 = var(nv2, 1);
  auto gb3 = buchberger(std::vector<Polynomial>{w1 * w1 - w2 * w2, w1 + w2}, ord);
  CHECK(gb3 == std::vector<Polynomial>{w1 + w2});
}

TEST_CASE("groebner fixed point and S-polynomial reduction") {
  MonomialOrder ord = MonomialOrder::grevlex();
  std::mt19937 rng(31);
  int nv = 3;
  for (int k = 0; k < 25; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 3; ++j) {
      Polynomial g = random_poly(rng, nv, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(gens, ord);
    // Every S-polynomial reduces to zero.
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
    // Recomputing from the basis returns the same set.
    CHECK(buchberger(gb, ord) == gb);
    // Generators lie in the ideal of the basis.
    for (const auto& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
  }
}

TEST_CASE("lex elimination shape") {
  // Lex basis of a zero-dimensional ideal contains a univariate polynomial in
  // the last variable.
  MonomialOrder lex = MonomialOrder::lex();
  int nv = 2;
  Polynomial x = var(nv, 0), y = var(nv, 1);
  auto gb = buchberger(std::vector<Polynomial>{x * x + y * y - Polynomial::constant(nv, 2),
                                               x - y},
                       lex);
  bool found_univariate = false;
  for (const auto& g : gb) {
    bool only_last = true;
    for (const auto& [m, c] : g.terms())
      if (m[0] > 0) only_last = false;
    if (only_last && !g.is_zero()) found_univariate = true;
  }
  CHECK(found_univariate);
}
