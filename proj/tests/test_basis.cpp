#include <doctest.h>

#include "ennorm/graded_basis.hpp"
#include "oracles.hpp"

using namespace ennorm;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }

// Independent slice-span oracle: spans the degree-n slice of the ideal by
// monomial*generator products in e-coordinates and extracts the orthogonal
// complement by a full SVD.
Eigen::MatrixXcd complement_by_svd(const Ideal& a, int n, const WeightScheme& w) {
  auto mons = oracles::monomials_of_degree(a.num_vars(), n);
  DegreeEnum en(a.num_vars(), n);
  long long D = en.size();
  std::vector<Eigen::VectorXcd> cols;
  for (const auto& g : a.gens()) {
    int dg = g.degree();
    if (dg > n) continue;
    for (const auto& shift : oracles::monomials_of_degree(a.num_vars(), n - dg)) {
      Polynomial p = g.times(shift, GaussianRational(1));
      Eigen::VectorXcd col = Eigen::VectorXcd::Zero(D);
      for (const auto& [m, c] : p.terms())
        col(en.rank(m.exponents())) = c.to_complex() * w.monomial_norm(m);
      cols.push_back(col);
    }
  }
  Eigen::MatrixXcd A(D, std::max<size_t>(cols.size(), 1));
  A.setZero();
  for (size_t j = 0; j < cols.size(); ++j) A.col(j) = cols[j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullU);
  int rank = 0;
  double thr = 1e-10 * (svd.singularValues().size() ? svd.singularValues()(0) : 0.0);
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > std::max(thr, 1e-12)) ++rank;
  return svd.matrixU().rightCols(D - rank);
}

}  // namespace

TEST_CASE("one variable free module") {
  Ideal a(1, {});
  GradedBasis b(a, 10, WeightScheme::hardy());
  for (int n = 0; n <= 10; ++n) {
    CHECK(b.dim(n) == 1);
    // Basis vector is the normalized monomial itself.
    CHECK(std::abs(b.block(n).basis(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dimension cross-check against the Hilbert function") {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  std::vector<Ideal> corpus{
      Ideal(2, {var(2, 0) * var(2, 0)}),
      Ideal(2, {var(2, 0) - var(2, 1)}),
      Ideal(nv, {(z1 - z2).pow(2), z3 * (z1 + z2), z3 * z3}),
      Ideal(nv, {(z1 - z2).pow(2), z3 * (z1 - z2), z3 * z3}),
      Ideal(nv, {z1 - z2, z3 * z3 - (z2 * z3).scaled(GaussianRational::ratio(1, 2))}),
  };
  for (const auto& a : corpus) {
    for (auto w : {WeightScheme::hardy(), WeightScheme::bergman(1)}) {
      GradedBasis b(a, 12, w);
      for (int n = 0; n <= 12; ++n) CHECK(b.dim(n) == hilbert_function(a, n));
    }
  }
}

TEST_CASE("orthonormality to 1e-10") {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  Ideal a(nv, {(z1 - z2).pow(2), z3 * (z1 + z2), z3 * z3});
  for (auto w : {WeightScheme::hardy(), WeightScheme::bergman(2)}) {
    GradedBasis b(a, 15, w);
    for (int n = 0; n <= 15; ++n) {
      const auto& B = b.block(n).basis;
      if (B.cols() == 0) continue;
      Eigen::MatrixXcd g = B.adjoint() * B;
      CHECK((g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).norm() < 1e-10);
    }
  }
}

TEST_CASE("closed form for the diagonal line module") {
  // a = (z1 - z2), hardy: N_n is spanned by sum_i z1^i z2^{n-i} / sqrt(n+1).
  Ideal a(2, {var(2, 0) - var(2, 1)});
  GradedBasis b(a, 12, WeightScheme::hardy());
  for (int n = 0; n <= 12; ++n) {
    REQUIRE(b.dim(n) == 1);
    const auto& col = b.block(n).basis.col(0);
    double expect = 1.0 / std::sqrt(n + 1.0);
    // Entries all equal up to a global phase.
    std::complex<double> phase = col(0) / std::abs(col(0));
    for (int r = 0; r < col.size(); ++r)
      CHECK(std::abs(col(r) / phase - expect) < 1e-12);
  }
}

TEST_CASE("slice complement matches the SVD oracle") {
  int nv = 3;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2);
  std::vector<Ideal> corpus{
      Ideal(2, {var(2, 0) * var(2, 0)}),
      Ideal(nv, {(z1 - z2).pow(2), z3 * (z1 + z2), z3 * z3}),
      Ideal(nv, {z1 * z2 - z3 * z3}),
  };
  for (const auto& a : corpus) {
    for (auto w : {WeightScheme::hardy(), WeightScheme::bergman(1)}) {
      GradedBasis b(a, 6, w);
      for (int n = 0; n <= 6; ++n) {
        Eigen::MatrixXcd oracle = complement_by_svd(a, n, w);
        REQUIRE(oracle.cols() == b.dim(n));
        // Same subspace: projectors agree.
        Eigen::MatrixXcd p1 = b.block(n).basis * b.block(n).basis.adjoint();
        Eigen::MatrixXcd p2 = oracle * oracle.adjoint();
        CHECK((p1 - p2).norm() < 1e-8);
      }
    }
  }
}

TEST_CASE("four-variable dimensions match the Hilbert function") {
  int nv = 4;
  Polynomial z1 = var(nv, 0), z2 = var(nv, 1), z3 = var(nv, 2), z4 = var(nv, 3);
  Ideal a(nv, {z1 - z2, z3 * z3, z3 * z4, z4 * z4});
  GradedBasis b(a, 10, WeightScheme::bergman(1));
  for (int n = 0; n <= 10; ++n) CHECK(b.dim(n) == hilbert_function(a, n));
}

TEST_CASE("standard monomials match the quotient structure") {
  Ideal a(2, {var(2, 0) * var(2, 0)});
  GradedBasis b(a, 8, WeightScheme::hardy());
  // Standard monomials of (z1^2): z2^n and z1 z2^{n-1}.
  for (int n = 1; n <= 8; ++n) {
    const auto& mons = b.block(n).std_monomials;
    REQUIRE(mons.size() == 2);
    bool has_pure = false, has_mixed = false;
    for (const auto& m : mons) {
      if (m[0] == 0 && m[1] == n) has_pure = true;
      if (m[0] == 1 && m[1] == n - 1) has_mixed = true;
    }
    CHECK(has_pure);
    CHECK(has_mixed);
  }
}
