#include "ennorm/monomial.hpp"

namespace ennorm {

std::string Monomial::str() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(i + 1);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

int grevlex_cmp(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the one whose last differing exponent is smaller is larger.
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& ma, const Monomial& mb) const {
  const auto& a = ma.exponents();
  const auto& b = mb.exponents();
  if (a.size() != b.size()) throw std::invalid_argument("mismatched variable counts");
  int n = static_cast<int>(a.size());
  switch (kind_) {
    case Kind::GrevLex:
      return grevlex_cmp(a, b, 0, n);
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::BlockElim: {
      int c = grevlex_cmp(a, b, 0, block_);
      if (c) return c;
      return grevlex_cmp(a, b, block_, n);
    }
  }
  return 0;
}

}  // namespace ennorm
