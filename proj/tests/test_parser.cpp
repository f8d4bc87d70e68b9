#include <doctest.h>

#include <random>

#include "ennorm/parser.hpp"

using namespace ennorm;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }

Polynomial random_poly(std::mt19937& rng, int nv) {
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 4);
  Polynomial p(nv);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> exps(nv);
    for (auto& v : exps) v = e(rng);
    p.add_term(Monomial(exps),
               GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial grammar") {
  Polynomial p = parse_polynomial("(1/2 + 1/3*i)*z1^2 - z2*z3", 3);
  Polynomial expect =
      (var(3, 0) * var(3, 0)).scaled(GaussianRational(mpq_class(1, 2), mpq_class(1, 3))) -
      var(3, 1) * var(3, 2);
  CHECK(p == expect);

  CHECK(parse_polynomial("z1 - z1", 2).is_zero());
  CHECK(parse_polynomial("-z1 + z2", 2) == var(2, 1) - var(2, 0));
  CHECK(parse_polynomial("i*i", 1) == Polynomial::constant(1, GaussianRational(-1)));
  CHECK(parse_polynomial("(z1 + z2)^3", 2) == (var(2, 0) + var(2, 1)).pow(3));

  CHECK_THROWS_AS(parse_polynomial("z5", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z1 +", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z1 ^ -2", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(z1", 3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 3), ParseError);
}

TEST_CASE("print-parse round trip") {
  std::mt19937 rng(97);
  for (int k = 0; k < 200; ++k) {
    Polynomial p = random_poly(rng, 3);
    CHECK(parse_polynomial(p.str(), 3) == p);
  }
}

TEST_CASE("ideal file grammar") {
  std::string text = R"(# three homogeneous generators
name = sample
ring vars = z1 z2 z3
weight = hardy
gen = (z1 - z2)^2
gen = z3*(z1 + z2)
gen = z3^2
)";
  IdealFile f = parse_ideal_file(text);
  CHECK(f.name == "sample");
  CHECK(f.num_vars == 3);
  CHECK(f.weight.kind() == WeightScheme::Kind::Hardy);
  REQUIRE(f.generators.size() == 3);
  CHECK(f.generators[0] == (var(3, 0) - var(3, 1)).pow(2));

  // parse -> print -> parse is a fixed point.
  IdealFile g = parse_ideal_file(f.to_text());
  CHECK(g.name == f.name);
  CHECK(g.num_vars == f.num_vars);
  REQUIRE(g.generators.size() == f.generators.size());
  for (size_t k = 0; k < f.generators.size(); ++k) CHECK(g.generators[k] == f.generators[k]);
  CHECK(g.to_text() == f.to_text());
}

TEST_CASE("weight lines") {
  std::string text = "ring vars = z1 z2\nweight = bergman s = 1\ngen = z1\n";
  IdealFile f = parse_ideal_file(text);
  CHECK(f.weight.kind() == WeightScheme::Kind::Bergman);
  CHECK(f.weight.s() == 1.0);
  CHECK(f.weight_s_text == "1");

  IdealFile h = parse_ideal_file("ring vars = z1\nweight = bergman s = 3/2\ngen = z1\n");
  CHECK(h.weight.s() == doctest::Approx(1.5));

  CHECK_THROWS_AS(parse_ideal_file("ring vars = z1\nweight = fock\ngen = z1\n"), ParseError);
}

TEST_CASE("ideal file errors") {
  CHECK_THROWS_AS(parse_ideal_file("ring vars = z1 z2\ngen = z1 - z1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring vars = z1 z2\ngen = z3\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("gen = z1\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring vars = z1 z2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring vars = z2 z1\ngen = z1\n"), ParseError);

  try {
    parse_ideal_file("ring vars = z1 z2\ngen = z1 + *\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}
