#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ennorm {

/// Exact element of Q(i). Real and imaginary parts are arbitrary-precision
/// rationals, always kept in lowest terms with positive denominators.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im = mpq_class(0))
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// |a|^2 = re^2 + im^2, an exact non-negative rational.
  mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class n = norm_sq();
    return GaussianRational(re_ / n, -im_ / n);
  }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text form: "0", "3/4", "-i", "1/2+1/3i", "2-i", ...
  std::string str() const;

  /// Inverse of str(). Accepts any sum of rational and rational*i pieces.
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace ennorm
