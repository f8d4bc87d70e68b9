#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ennorm {

/// Exponent vector of a power product z1^e1 ... zd^ed.
class Monomial {
 public:
  explicit Monomial(int num_vars) : e_(static_cast<size_t>(num_vars), 0) {}
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }

  int num_vars() const { return static_cast<int>(e_.size()); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  bool is_one() const {
    for (int v : e_)
      if (v) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw std::domain_error("non-exact monomial division");
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  // Container ordering (plain lexicographic on exponents); independent of any
  // monomial order and used only to keep term lists canonical.
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }

  std::string str() const;  // e.g. "z1^2*z3", "1" for the unit

 private:
  std::vector<int> e_;
};

/// Total multiplicative monomial orders with 1 minimal.
class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex, BlockElim };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Eliminates the first `k` variables: any monomial containing one of them
  /// is larger than any monomial in the remaining variables alone.
  static MonomialOrder block_elim(int k) { return MonomialOrder(Kind::BlockElim, k); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string key() const {
    switch (kind_) {
      case Kind::GrevLex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::BlockElim: return "block" + std::to_string(block_);
    }
    return "?";
  }

 private:
  MonomialOrder(Kind k, int block) : kind_(k), block_(block) {}
  Kind kind_;
  int block_;
};

}  // namespace ennorm
