#include "ennorm/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ennorm {

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis,
                      const MonomialOrder& ord) {
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("zero divisor in basis");

  DivisionResult res{std::vector<Polynomial>(basis.size(), Polynomial(f.num_vars())),
                     Polynomial(f.num_vars())};
  Polynomial work = f;
  while (!work.is_zero()) {
    const auto& [lm, lc] = work.leading_term(ord);
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      const auto& [glm, glc] = basis[k].leading_term(ord);
      if (glm.divides(lm)) {
        Monomial q = lm / glm;
        GaussianRational c = lc / glc;
        res.quotients[k].add_term(q, c);
        work -= basis[k].times(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return res;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
  return divide(f, basis, ord).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const auto& [fm, fc] = f.leading_term(ord);
  const auto& [gm, gc] = g.leading_term(ord);
  Monomial l = lcm(fm, gm);
  return f.times(l / fm, fc.inverse()) - g.times(l / gm, gc.inverse());
}

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& ord) {
  return p.scaled(p.leading_term(ord).second.inverse());
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(monic(g, ord));
  if (basis.empty()) throw std::invalid_argument("no nonzero generators");

  // Pending S-pairs keyed by (lcm degree, i, j); done set records pairs
  // already handled for the chain criterion.
  using Key = std::tuple<int, size_t, size_t>;
  std::set<Key> pending;
  std::set<std::pair<size_t, size_t>> done;
  auto lm = [&](size_t k) -> const Monomial& { return basis[k].leading_term(ord).first; };
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pending.insert({lcm(lm(i), lm(j)).degree(), i, j});
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    done.insert({i, j});

    if (coprime(lm(i), lm(j))) continue;  // product criterion
    // Chain criterion: skip if some k divides the lcm and both side pairs are
    // already handled.
    Monomial l = lcm(lm(i), lm(j));
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!lm(k).divides(l)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (!r.is_zero()) {
      basis.push_back(monic(r, ord));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_term(ord).first;
      const Monomial& mj = basis[j].leading_term(ord).first;
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Auto-reduce tails.
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = monic(normal_form(reduced[i], others, ord), ord);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return reduced;
}

}  // namespace ennorm
