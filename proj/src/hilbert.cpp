#include "ennorm/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ennorm {

namespace {

using Poly1 = std::vector<long long>;  // univariate integer polynomial in t

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 add(const Poly1& a, const Poly1& b) {
  Poly1 r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly1 shift(const Poly1& a, int k) {
  if (a.empty()) return a;
  Poly1 r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

Poly1 mul_one_minus_tk(const Poly1& a, int k) {
  Poly1 r = a;
  r.resize(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] -= a[i];
  trim(r);
  return r;
}

long long eval_at_one(const Poly1& a) {
  long long s = 0;
  for (long long v : a) s += v;
  return s;
}

// Exact division by (1-t); requires eval_at_one == 0.
Poly1 div_one_minus_t(const Poly1& a) {
  Poly1 q(a.size(), 0);
  long long carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  if (carry != 0) throw std::logic_error("numerator not divisible by (1-t)");
  if (!q.empty()) q.pop_back();
  trim(q);
  return q;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& g : out)
      if (g.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  return out;
}

// Numerator of the Hilbert series of k[z]/M over the full denominator
// (1-t)^d, by N(M) = N(M + (x)) + t*N(M : x) on a pivot variable.
Poly1 numerator(std::vector<Monomial> gens, int num_vars,
                std::map<std::vector<std::vector<int>>, Poly1>& memo) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& m : gens)
    if (m.is_one()) return {};

  // Pairwise coprime generators: product formula.
  bool all_coprime = true;
  for (size_t i = 0; i < gens.size() && all_coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && all_coprime; ++j)
      if (!coprime(gens[i], gens[j])) all_coprime = false;
  if (all_coprime) {
    Poly1 r{1};
    for (const auto& m : gens) r = mul_one_minus_tk(r, m.degree());
    return r;
  }

  std::vector<std::vector<int>> key;
  key.reserve(gens.size());
  for (const auto& m : gens) key.push_back(m.exponents());
  std::sort(key.begin(), key.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Pivot: the variable occurring in the most generators.
  std::vector<int> freq(num_vars, 0);
  for (const auto& m : gens)
    for (int v = 0; v < num_vars; ++v)
      if (m[v] > 0) ++freq[v];
  int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

  std::vector<int> pe(num_vars, 0);
  pe[pivot] = 1;
  Monomial x(pe);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    if (m[pivot] > 0) {
      std::vector<int> e = m.exponents();
      e[pivot] -= 1;
      colon.push_back(Monomial(std::move(e)));
    } else {
      colon.push_back(m);
    }
  }

  Poly1 r = add(numerator(std::move(plus), num_vars, memo),
                shift(numerator(std::move(colon), num_vars, memo), 1));
  memo.emplace(std::move(key), r);
  return r;
}

long long binom(long long n, int k) {
  if (k < 0 || n < 0) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HilbertSeries HilbertSeries::from_raw(std::vector<long long> num, int denom_exp) {
  trim(num);
  if (num.empty()) return HilbertSeries{{}, 0};
  while (denom_exp > 0 && eval_at_one(num) == 0) {
    num = div_one_minus_t(num);
    --denom_exp;
    if (num.empty()) return HilbertSeries{{}, 0};
  }
  return HilbertSeries{std::move(num), denom_exp};
}

long long HilbertSeries::coefficient(int n) const {
  if (n < 0) return 0;
  if (denom_exp == 0)
    return n < static_cast<int>(numerator.size()) ? numerator[n] : 0;
  long long s = 0;
  for (size_t k = 0; k < numerator.size(); ++k) {
    if (static_cast<int>(k) > n) break;
    s += numerator[k] * binom(n - static_cast<long long>(k) + denom_exp - 1, denom_exp - 1);
  }
  return s;
}

long long HilbertSeries::total() const {
  if (denom_exp != 0) throw std::domain_error("total of a non-polynomial series");
  return eval_at_one(numerator);
}

HilbertSeries HilbertSeries::minus(const HilbertSeries& other) const {
  // Bring both over (1-t)^max and subtract.
  int e = std::max(denom_exp, other.denom_exp);
  Poly1 a = numerator;
  for (int k = denom_exp; k < e; ++k) a = mul_one_minus_tk(a, 1);
  Poly1 b = other.numerator;
  for (int k = other.denom_exp; k < e; ++k) b = mul_one_minus_tk(b, 1);
  for (auto& v : b) v = -v;
  return from_raw(add(a, b), e);
}

HilbertSeries hilbert_series_monomial(std::vector<Monomial> gens, int num_vars) {
  std::map<std::vector<std::vector<int>>, Poly1> memo;
  Poly1 num = numerator(std::move(gens), num_vars, memo);
  return HilbertSeries::from_raw(std::move(num), num_vars);
}

}  // namespace ennorm
