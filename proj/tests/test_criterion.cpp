#include <doctest.h>

#include "ennorm/criterion.hpp"

using namespace ennorm;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }
GaussianRational gr(long n) { return GaussianRational(n); }
GaussianRational gr(long n, long d) { return GaussianRational::ratio(n, d); }

Line line_of(std::initializer_list<GaussianRational> xs) {
  std::vector<GaussianRational> v = xs;
  return normalize_direction(v);
}

Ideal defect_one_ideal() {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  return Ideal(nv, {(z1 - z2).pow(2), z3 * (z1 + z2), z3 * z3});
}

Ideal infinite_defect_ideal() {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  return Ideal(nv, {(z1 - z2).pow(2), z3 * (z1 - z2), z3 * z3});
}

}  // namespace

TEST_CASE("j_ideal") {
  Ideal j1 = j_ideal(line_of({gr(1), gr(1), gr(0)}));
  CHECK(j1.equals(Ideal(3, {var(3, 0) - var(3, 1)})));

  Ideal j2 = j_ideal(line_of({gr(0), gr(1)}));
  CHECK(j2.is_zero_ideal());

  // u = (1, i): conj(i) = -i gives z1 + i z2.
  Ideal j3 = j_ideal(line_of({gr(1), GaussianRational::i()}));
  CHECK(j3.equals(Ideal(2, {var(2, 0) + var(2, 1).scaled(GaussianRational::i())})));
}

TEST_CASE("quasi-prime classification on the reference corpus") {
  // ((z1-z2)^2, z3(z1+z2), z3^2): dim sqrt(I)/I' = 1.
  Ideal a = defect_one_ideal();
  auto comps = isolated_primary_components(a, extract_lines(a).lines);
  REQUIRE(comps.size() == 1);
  QuasiPrimeClass c = quasi_prime_classification(comps[0]);
  CHECK(c.kind == QuasiPrimeClass::Kind::EssentiallyQuasiPrime);
  CHECK(c.dim == 1);
  // I' has reduced basis {z2 z3, z3^2, z1 - z2} and Hilbert function 1,2,1,1,...
  CHECK(hilbert_function(c.iprime, 1) == 2);
  CHECK(hilbert_function(c.iprime, 2) == 1);

  // ((z1-z2)^2, z3(z1-z2), z3^2): C[z]/I' has Hilbert function 2 for n >= 1.
  Ideal b = infinite_defect_ideal();
  auto bc = isolated_primary_components(b, extract_lines(b).lines);
  REQUIRE(bc.size() == 1);
  QuasiPrimeClass d = quasi_prime_classification(bc[0]);
  CHECK(d.kind == QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime);
  for (int n = 1; n <= 6; ++n) CHECK(hilbert_function(d.iprime, n) == 2);

  // A line prime is its own component and classifies QuasiPrime.
  Line u = line_of({gr(1), gr(1), gr(1, 2)});
  Ideal p = line_prime(u);
  PrimaryComponent pc{u, p, p};
  CHECK(quasi_prime_classification(pc).kind == QuasiPrimeClass::Kind::QuasiPrime);
}

TEST_CASE("verdict pipeline on the reference corpus") {
  AnalysisReport r47 = essential_normality_verdict(defect_one_ideal());
  CHECK(r47.verdict == AnalysisReport::Verdict::EssentiallyNormal);
  REQUIRE(r47.classes.size() == 1);
  CHECK(r47.classes[0].kind == QuasiPrimeClass::Kind::EssentiallyQuasiPrime);
  CHECK(r47.classes[0].dim == 1);
  CHECK(r47.dimension == 1);

  AnalysisReport r48 = essential_normality_verdict(infinite_defect_ideal());
  CHECK(r48.verdict == AnalysisReport::Verdict::NotEssentiallyNormal);
  REQUIRE(r48.classes.size() == 1);
  CHECK(r48.classes[0].kind == QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime);

  // The fat line (z1^2) in 2 vars.
  AnalysisReport r42 = essential_normality_verdict(Ideal(2, {var(2, 0) * var(2, 0)}));
  CHECK(r42.verdict == AnalysisReport::Verdict::NotEssentiallyNormal);
  REQUIRE(r42.classes.size() == 1);
  CHECK(r42.classes[0].kind == QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime);

  // Condition A violation: (z1 - z2, z3^2 - (1/2) z2 z3).
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  Ideal conda(nv, {z1 - z2, z3 * z3 - (z2 * z3).scaled(gr(1, 2))});
  AnalysisReport rA = essential_normality_verdict(conda);
  CHECK(rA.verdict == AnalysisReport::Verdict::NotEssentiallyNormal);
  CHECK(!rA.condition_a.holds);
  REQUIRE(rA.lines.size() == 2);
  bool l0 = false, lhalf = false;
  for (const auto& l : rA.lines) {
    if (l.direction == std::vector<GaussianRational>{gr(1), gr(1), gr(0)}) l0 = true;
    if (l.direction == std::vector<GaussianRational>{gr(1), gr(1), gr(1, 2)}) lhalf = true;
  }
  CHECK(l0);
  CHECK(lhalf);
}

TEST_CASE("fast-fail and error paths") {
  // Dimension 0: origin only.
  AnalysisReport fin = essential_normality_verdict(Ideal(2, {var(2, 0), var(2, 1)}));
  CHECK(fin.verdict == AnalysisReport::Verdict::FiniteDimensional);
  CHECK(fin.dimension == 0);

  // Dimension >= 2 fast-fail.
  AnalysisReport dim2 = essential_normality_verdict(Ideal(3, {var(3, 0) * var(3, 1)}));
  CHECK(dim2.verdict == AnalysisReport::Verdict::NotEssentiallyNormal);
  CHECK(dim2.dimension == 2);

  // Numeric lines: unsupported.
  Ideal irr(2, {var(2, 0) * var(2, 0) - (var(2, 1) * var(2, 1)).scaled(gr(2))});
  AnalysisReport uns = essential_normality_verdict(irr);
  CHECK(uns.verdict == AnalysisReport::Verdict::Unsupported);

  // Rejected inputs.
  CHECK_THROWS_AS(essential_normality_verdict(Ideal(2, {var(2, 0) + var(2, 0) * var(2, 0)})),
                  InputError);
  CHECK_THROWS_AS(essential_normality_verdict(Ideal(2, {})), InputError);
  CHECK_THROWS_AS(
      essential_normality_verdict(Ideal(2, {Polynomial::constant(2, gr(1))})), InputError);
}

TEST_CASE("radical inputs with Condition A classify as quasi-prime") {
  // Intersections of line primes with pairwise distinct Lambda patterns.
  int nv = 3;
  Line u1 = line_of({gr(1), gr(1), gr(1, 3)});
  Line u2 = line_of({gr(1), gr(-1), gr(0)});
  Line u3 = line_of({gr(0), gr(1), gr(1)});
  Ideal a = ideal_intersect(ideal_intersect(line_prime(u1), line_prime(u2)), line_prime(u3));
  AnalysisReport r = essential_normality_verdict(a);
  CHECK(r.verdict == AnalysisReport::Verdict::EssentiallyNormal);
  REQUIRE(r.classes.size() == 3);
  for (const auto& c : r.classes) CHECK(c.kind == QuasiPrimeClass::Kind::QuasiPrime);
  CHECK(r.embedded_defect == 0);
}

TEST_CASE("classification is generator-set independent") {
  Ideal a = defect_one_ideal();
  Ideal regen(a.num_vars(), a.groebner_basis());
  AnalysisReport r1 = essential_normality_verdict(a);
  AnalysisReport r2 = essential_normality_verdict(regen);
  CHECK(r1.verdict == r2.verdict);
  REQUIRE(r1.classes.size() == r2.classes.size());
  for (size_t i = 0; i < r1.classes.size(); ++i) {
    CHECK(r1.classes[i].kind == r2.classes[i].kind);
    CHECK(r1.classes[i].dim == r2.classes[i].dim);
  }
}

TEST_CASE("complex line directions flow through the whole pipeline") {
  // (z1^2 + z2^2) = intersection of the line primes at (1, i) and (1, -i);
  // the Lambda-subvectors are independent, both components are the primes.
  Ideal a(2, {var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1)});
  AnalysisReport r = essential_normality_verdict(a);
  CHECK(r.verdict == AnalysisReport::Verdict::EssentiallyNormal);
  CHECK(r.condition_a.holds);
  REQUIRE(r.classes.size() == 2);
  for (const auto& c : r.classes) CHECK(c.kind == QuasiPrimeClass::Kind::QuasiPrime);

  // J_u for u = (1, i) is (z1 + i z2), contained in the line prime.
  for (const auto& comp : r.components) {
    Ideal j = j_ideal(comp.line);
    for (const auto& g : j.gens()) CHECK(comp.prime.contains(g));
  }
}

TEST_CASE("four-variable corpus") {
  int nv = 4;
  Line u1 = line_of({gr(1), gr(1), gr(1, 2), gr(0)});
  Line u2 = line_of({gr(0), gr(1), gr(1), gr(1, 3)});
  Ideal a = ideal_intersect(line_prime(u1), line_prime(u2));
  AnalysisReport r = essential_normality_verdict(a);
  CHECK(r.dimension == 1);
  CHECK(r.verdict == AnalysisReport::Verdict::EssentiallyNormal);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.condition_a.holds);  // Lambda sets {1,2} and {2,3} differ

  // Same Lambda sets with dependent subvectors must fail in 4 variables too.
  Line v1 = line_of({gr(1), gr(1), gr(1, 2), gr(0)});
  Line v2 = line_of({gr(1), gr(1), gr(0), gr(1, 3)});
  Ideal b = ideal_intersect(line_prime(v1), line_prime(v2));
  AnalysisReport rb = essential_normality_verdict(b);
  CHECK(rb.verdict == AnalysisReport::Verdict::NotEssentiallyNormal);
  CHECK(!rb.condition_a.holds);
  (void)nv;
}

TEST_CASE("verdict is a pure function of the report fields") {
  for (const Ideal& a : {defect_one_ideal(), infinite_defect_ideal()}) {
    AnalysisReport r = essential_normality_verdict(a);
    bool expect_en = r.condition_a.holds;
    for (const auto& c : r.classes)
      if (c.kind == QuasiPrimeClass::Kind::NotEssentiallyQuasiPrime) expect_en = false;
    if (r.dimension == 1) {
      CHECK((r.verdict == AnalysisReport::Verdict::EssentiallyNormal) == expect_en);
    }
  }
}
