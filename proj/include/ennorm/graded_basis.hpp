#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ennorm/ideal.hpp"
#include "ennorm/weights.hpp"

namespace ennorm {

/// Enumeration of the degree-n monomials in d variables in graded-reverse-lex
/// descending order, with O(d) rank lookups (no table of exponent vectors).
class DegreeEnum {
 public:
  DegreeEnum(int num_vars, int degree);

  long long size() const { return size_; }
  int degree() const { return degree_; }
  int num_vars() const { return num_vars_; }

  /// Rank of an exponent vector in the storage (grevlex-descending) order.
  long long rank(const std::vector<int>& e) const;

  /// C(a, k) for a <= degree + num_vars, k < num_vars (table lookup).
  long long choose(int a, int k) const { return binom_[a * num_vars_ + k]; }

  /// Visits all monomials in grevlex-ascending order (reverse storage order);
  /// f(rank, exponents).
  template <class F>
  void for_each_ascending(F&& f) const {
    std::vector<int> e(num_vars_, 0);
    long long r = size_ - 1;
    ascend(e, num_vars_ - 1, degree_, r, f);
  }

 private:
  // Storage order (rank 0 first) is grevlex descending, equivalently lex
  // ascending on the reversed exponent suffix (e_d, ..., e_2); the ascending
  // visit therefore walks that suffix downward.
  template <class F>
  void ascend(std::vector<int>& e, int var, int rem, long long& r, F&& f) const {
    if (var == 0) {
      e[0] = rem;
      f(r--, const_cast<const std::vector<int>&>(e));
      e[0] = 0;
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[var] = v;
      ascend(e, var - 1, rem - v, r, f);
    }
    e[var] = 0;
  }

  int num_vars_;
  int degree_;
  long long size_;
  std::vector<long long> binom_;  // C(a, k), a <= degree + num_vars, k < num_vars
};

/// Per-degree slice of the quotient module [I]^perp: the standard monomials
/// parametrize the slice; the orthonormal basis is materialized in the
/// orthonormal-monomial (e-basis) coordinates.
struct DegreeBlock {
  int degree = 0;
  long long ambient = 0;                // number of degree-n monomials
  std::vector<Monomial> std_monomials;  // Groebner-standard monomials
  Eigen::MatrixXcd basis;               // ambient x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Builds degree blocks from the reduced grevlex basis of the ideal: every
/// non-standard monomial m contributes the slice vector m - NF(m), and the
/// module slice is the orthocomplement, parametrized in closed form by the
/// normal-form table of the degree.
class SliceFactory {
 public:
  /// One rewriting rule of the reduced grevlex basis: a monic leading
  /// monomial and its tail (all tail monomials are standard).
  struct Rewrite {
    std::vector<int> lt;
    std::vector<std::pair<std::vector<int>, std::complex<double>>> tail;
  };

  SliceFactory(const Ideal& a, WeightScheme w);

  const Ideal& ideal() const { return ideal_; }
  const WeightScheme& weight() const { return weight_; }
  const std::vector<Rewrite>& rewrites() const { return rewrites_; }

  DegreeBlock build(int degree) const;

  int max_generator_degree() const { return max_gen_degree_; }

 private:
  Ideal ideal_;
  WeightScheme weight_;
  std::vector<Rewrite> rewrites_;
  int max_gen_degree_ = 0;
};

namespace detail {
/// Replaces the columns of X by an orthonormal basis of their span
/// (column normalization followed by symmetric whitening of the Gram).
void orthonormalize_columns(Eigen::MatrixXcd& X);
}  // namespace detail

/// Materialized graded basis of [I]^perp up to a truncation degree.
class GradedBasis {
 public:
  GradedBasis(const Ideal& a, int max_degree, WeightScheme w);

  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  const WeightScheme& weight() const { return factory_.weight(); }
  const Ideal& ideal() const { return factory_.ideal(); }
  const SliceFactory& factory() const { return factory_; }

  int dim(int n) const { return blocks_[n].dim(); }
  const DegreeBlock& block(int n) const { return blocks_[n]; }

 private:
  SliceFactory factory_;
  std::vector<DegreeBlock> blocks_;
};

GradedBasis graded_quotient_basis(const Ideal& a, int max_degree, WeightScheme w);

/// Graded blocks of the compressed coordinate multipliers S_{z_i}.
struct CompressionMatrices {
  int num_vars = 0;
  int max_degree = 0;
  WeightScheme weight = WeightScheme::hardy();
  std::vector<int> dims;  // dims[n] = dim N_n, 0..max_degree
  // blocks[i][n]: dim N_{n+1} x dim N_n matrix of S_{z_i}: N_n -> N_{n+1}.
  std::vector<std::vector<Eigen::MatrixXcd>> blocks;
};

CompressionMatrices compression_matrices(const GradedBasis& basis);

/// Block of S_f from degree n to degree n + deg(f) for a polynomial f
/// (complex coefficients taken at face value).
Eigen::MatrixXcd compression_block(const GradedBasis& basis, const Polynomial& f, int n);

}  // namespace ennorm
