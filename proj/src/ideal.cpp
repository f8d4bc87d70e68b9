#include "ennorm/ideal.hpp"

#include <stdexcept>

namespace ennorm {

Ideal::Ideal(int num_vars, std::vector<Polynomial> gens)
    : num_vars_(num_vars), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("generator ring mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  homogeneous_ = true;
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) homogeneous_ = false;
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  std::scoped_lock lock(cache_->mutex);
  auto it = cache_->bases.find(ord.key());
  if (it != cache_->bases.end()) return it->second;
  std::vector<Polynomial> gb;
  if (!gens_.empty()) gb = buchberger(gens_, ord);
  return cache_->bases.emplace(ord.key(), std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, groebner_basis(), MonomialOrder::grevlex()).is_zero();
}

bool Ideal::is_unit_ideal() const {
  if (gens_.empty()) return false;
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::equals(const Ideal& other) const {
  if (num_vars_ != other.num_vars_) return false;
  return groebner_basis() == other.groebner_basis();
}

std::string Ideal::str() const {
  std::string out = "(";
  const auto& gb = gens_.empty() ? gens_ : groebner_basis();
  for (size_t i = 0; i < gb.size(); ++i) {
    if (i) out += ", ";
    out += gb[i].str();
  }
  if (gb.empty()) out += "0";
  return out + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("ring mismatch");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.num_vars(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("ring mismatch");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal(a.num_vars(), {});
  // t*a + (1-t)*b in k[t, z], then eliminate t.
  int nv = a.num_vars();
  Polynomial t = Polynomial::variable(nv + 1, 0);
  Polynomial one_minus_t = Polynomial::constant(nv + 1, GaussianRational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.insert_vars(0, 1));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.insert_vars(0, 1));
  auto gb = buchberger(gens, MonomialOrder::block_elim(1));
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool has_t = false;
    for (const auto& [m, c] : g.terms())
      if (m[0] > 0) has_t = true;
    if (!has_t) out.push_back(g.drop_vars(0, 1));
  }
  return Ideal(nv, std::move(out));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("quotient by zero polynomial");
  if (a.is_zero_ideal()) return a;
  Ideal fi(a.num_vars(), {f});
  Ideal meet = ideal_intersect(a, fi);
  std::vector<Polynomial> divisor{f};
  std::vector<Polynomial> out;
  for (const auto& g : meet.gens()) {
    DivisionResult d = divide(g, divisor, MonomialOrder::grevlex());
    if (!d.remainder.is_zero()) throw std::logic_error("intersection element not divisible");
    out.push_back(d.quotients[0]);
  }
  return Ideal(a.num_vars(), std::move(out));
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero polynomial");
  Ideal cur = a;
  const int max_steps = 64;  // Noetherian chain; the corpus stabilizes in <= 20
  for (int k = 0; k < max_steps; ++k) {
    Ideal next = ideal_quotient(cur, f);
    if (next.equals(cur)) return cur;
    cur = next;
  }
  throw std::runtime_error("saturation did not stabilize");
}

bool radical_membership(const Polynomial& f, const Ideal& a) {
  if (f.is_zero()) return true;
  if (a.is_zero_ideal()) return false;
  // Adjoin y as the last variable and test 1 - y*f with the generators.
  int nv = a.num_vars();
  Polynomial y = Polynomial::variable(nv + 1, nv);
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(g.insert_vars(nv, 1));
  gens.push_back(Polynomial::constant(nv + 1, GaussianRational(1)) - y * f.insert_vars(nv, 1));
  auto gb = buchberger(gens, MonomialOrder::grevlex());
  return gb.size() == 1 && gb[0].is_constant();
}

HilbertSeries hilbert_series(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("hilbert series needs a homogeneous ideal");
  std::vector<Monomial> lts;
  if (!a.is_zero_ideal()) {
    for (const auto& g : a.groebner_basis())
      lts.push_back(g.leading_term(MonomialOrder::grevlex()).first);
  }
  return hilbert_series_monomial(std::move(lts), a.num_vars());
}

long long hilbert_function(const Ideal& a, int n) { return hilbert_series(a).coefficient(n); }

KrullDimension krull_dimension(const Ideal& a) {
  if (!a.is_homogeneous()) throw std::invalid_argument("krull dimension needs a homogeneous ideal");
  if (a.is_unit_ideal()) return {true, 0};
  HilbertSeries hs = hilbert_series(a);
  return {false, hs.denom_exp};
}

}  // namespace ennorm
