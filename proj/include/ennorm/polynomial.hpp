#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "ennorm/monomial.hpp"
#include "ennorm/rational.hpp"

namespace ennorm {

/// Sparse multivariate polynomial over the Gaussian rationals. Terms are kept
/// sorted (descending container order on exponents) with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial zero(int num_vars) { return Polynomial(num_vars); }
  static Polynomial constant(int num_vars, GaussianRational c);
  static Polynomial variable(int num_vars, int index);  // 0-based index
  static Polynomial monomial(Monomial m, GaussianRational c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  GaussianRational coeff(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial times(const Monomial& m, const GaussianRational& c) const;
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(int k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Leading term with respect to a monomial order (largest monomial).
  const Term& leading_term(const MonomialOrder& ord) const;

  GaussianRational eval(std::span<const GaussianRational> point) const;
  std::complex<double> eval(std::span<const std::complex<double>> point) const;

  /// Substitutes 1 for variable `var` and removes it from the ring.
  Polynomial dehomogenize(int var) const;
  /// Ring map that inserts `count` new variables at position `at` (exponent 0).
  Polynomial insert_vars(int at, int count) const;
  /// Inverse of insert_vars for polynomials not involving those variables.
  Polynomial drop_vars(int at, int count) const;

  std::string str() const;  // grevlex-descending canonical form

  /// Builder: accumulates a coefficient onto monomial m (used by parsers and
  /// arithmetic kernels); keeps invariants.
  void add_term(const Monomial& m, const GaussianRational& c);

 private:
  int num_vars_;
  std::vector<Term> terms_;
};

}  // namespace ennorm
