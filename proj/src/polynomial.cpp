#include "ennorm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ennorm {

namespace {

bool container_less(const Monomial& a, const Monomial& b) { return a < b; }

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("mismatched variable counts");
}

}  // namespace

Polynomial Polynomial::constant(int num_vars, GaussianRational c) {
  Polynomial p(num_vars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(num_vars), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::out_of_range("variable index");
  std::vector<int> e(num_vars, 0);
  e[index] = 1;
  Polynomial p(num_vars);
  p.terms_.push_back({Monomial(std::move(e)), GaussianRational(1)});
  return p;
}

Polynomial Polynomial::monomial(Monomial m, GaussianRational c) {
  Polynomial p(m.num_vars());
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

GaussianRational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return key < t.first; });
  if (it != terms_.end() && it->first == m) return it->second;
  return GaussianRational();
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return key < t.first; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && container_less(b->first, a->first))) {
      out.push_back(*a++);
    } else if (a == terms_.end() || container_less(a->first, b->first)) {
      out.push_back(*b++);
    } else {
      GaussianRational c = a->second + b->second;
      if (!c.is_zero()) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::times(const Monomial& m, const GaussianRational& c) const {
  Polynomial r(num_vars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [tm, tc] : terms_) r.terms_.push_back({tm * m, tc * c});
  // Shifting by a fixed monomial preserves the container order.
  return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  return times(Monomial(num_vars_), c);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_ring(a, b);
  Polynomial r(a.num_vars());
  const Polynomial& small = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& big = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [m, c] : small.terms()) r += big.times(m, c);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = Polynomial::constant(num_vars_, GaussianRational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1) r *= base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return r;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.greater(t.first, best->first)) best = &t;
  return *best;
}

GaussianRational Polynomial::eval(std::span<const GaussianRational> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("point dimension mismatch");
  GaussianRational out;
  for (const auto& [m, c] : terms_) {
    GaussianRational v = c;
    for (int i = 0; i < num_vars_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    out += v;
  }
  return out;
}

std::complex<double> Polynomial::eval(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("point dimension mismatch");
  std::complex<double> out = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.to_complex();
    for (int i = 0; i < num_vars_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    out += v;
  }
  return out;
}

Polynomial Polynomial::dehomogenize(int var) const {
  Polynomial r(num_vars_ - 1);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e;
    e.reserve(num_vars_ - 1);
    for (int i = 0; i < num_vars_; ++i)
      if (i != var) e.push_back(m[i]);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::insert_vars(int at, int count) const {
  Polynomial r(num_vars_ + count);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(num_vars_ + count, 0);
    for (int i = 0; i < num_vars_; ++i) e[i < at ? i : i + count] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::drop_vars(int at, int count) const {
  Polynomial r(num_vars_ - count);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e;
    e.reserve(num_vars_ - count);
    for (int i = 0; i < num_vars_; ++i) {
      if (i >= at && i < at + count) {
        if (m[i] != 0) throw std::domain_error("dropped variable occurs in polynomial");
      } else {
        e.push_back(m[i]);
      }
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

namespace {

// Coefficient text in the polynomial grammar (explicit '*' before 'i',
// parentheses around mixed complex values). `sign_out` receives the sign that
// the term joiner should print; the returned magnitude text never starts
// with '-'.
std::string coeff_text(const GaussianRational& c, int& sign_out) {
  if (c.is_real()) {
    sign_out = c.re() < 0 ? -1 : 1;
    mpq_class a = abs(c.re());
    return a.get_str();
  }
  if (c.re() == 0) {
    sign_out = c.im() < 0 ? -1 : 1;
    mpq_class a = abs(c.im());
    return a == 1 ? "i" : a.get_str() + "*i";
  }
  sign_out = 1;
  std::string s = "(";
  s += c.re().get_str();
  s += c.im() < 0 ? " - " : " + ";
  mpq_class a = abs(c.im());
  s += a == 1 ? "i" : a.get_str() + "*i";
  s += ")";
  return s;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Canonical printing uses grevlex-descending term order.
  std::vector<const Term*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(ts.begin(), ts.end(),
            [&](const Term* x, const Term* y) { return ord.greater(x->first, y->first); });
  std::string out;
  bool first = true;
  for (const Term* t : ts) {
    const auto& [m, c] = *t;
    int sign = 1;
    std::string cs = coeff_text(c, sign);
    if (first) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += cs;
    } else if (cs == "1") {
      out += m.str();
    } else {
      out += cs + "*" + m.str();
    }
  }
  return out;
}

}  // namespace ennorm
