#include <doctest.h>

#include <random>

#include "ennorm/polynomial.hpp"

using namespace ennorm;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }

Monomial random_monomial(std::mt19937& rng, int nv, int max_exp = 4) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> exps(nv);
  for (auto& v : exps) v = e(rng);
  return Monomial(exps);
}

}  // namespace

TEST_CASE("ring arithmetic identities") {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1);

  CHECK((z1 - z2) * (z1 + z2) == z1 * z1 - z2 * z2);
  Polynomial f = (z1 - z2) * (z1 + z2) * z2;
  CHECK((f + (-f)).is_zero());

  Polynomial sq = (z1 - z2).pow(2);
  Polynomial expect = z1 * z1 - z1 * z2.scaled(GaussianRational(2)) + z2 * z2;
  CHECK(sq == expect);
}

TEST_CASE("degree and homogeneity") {
  int nv = 2;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1);
  CHECK(Polynomial::zero(nv).degree() == -1);
  CHECK((z1 * z1 - z2 * z2).is_homogeneous());
  CHECK(!(z1 * z1 - z2).is_homogeneous());
  CHECK((z1 * z1 * z2).degree() == 3);
}

TEST_CASE("monomial order axioms on random triples") {
  std::mt19937 rng(101);
  int nv = 4;
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elim(2)}) {
    Monomial one(nv);
    for (int k = 0; k < 1000; ++k) {
      Monomial a = random_monomial(rng, nv);
      Monomial b = random_monomial(rng, nv);
      Monomial c = random_monomial(rng, nv);
      // Totality and antisymmetry.
      int ab = ord.compare(a, b);
      CHECK(ab == -ord.compare(b, a));
      CHECK((ab == 0) == (a == b));
      // Transitivity.
      if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
      // Multiplicativity.
      if (ab != 0) CHECK(ord.compare(a * c, b * c) == ab);
      // 1 is minimal.
      if (!a.is_one()) CHECK(ord.greater(a, one));
    }
  }
}

TEST_CASE("evaluation") {
  int nv = 2;
  Polynomial f = var(nv, 0) * var(nv, 0) - var(nv, 1);
  std::vector<GaussianRational> pt{GaussianRational(2), GaussianRational(4)};
  CHECK(f.eval(pt).is_zero());
  std::vector<GaussianRational> pt2{GaussianRational::i(), GaussianRational(-1)};
  CHECK(f.eval(pt2).is_zero());
}

TEST_CASE("variable maps") {
  int nv = 3;
  Polynomial f = var(nv, 0) * var(nv, 2) - var(nv, 1);
  Polynomial g = f.insert_vars(0, 1);
  CHECK(g.num_vars() == 4);
  CHECK(g.drop_vars(0, 1) == f);
  Polynomial h = f.dehomogenize(2);  // z3 := 1
  CHECK(h == var(2, 0) - var(2, 1));
}
