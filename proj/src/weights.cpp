#include "ennorm/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace ennorm {

WeightScheme WeightScheme::bergman(double s) {
  if (!(s >= 0)) throw std::invalid_argument("bergman weight needs s >= 0");
  return WeightScheme(Kind::Bergman, s);
}

double WeightScheme::factor(int n) const {
  if (kind_ == Kind::Hardy) return 1.0;
  // B(n+1, s+1) = n! Gamma(s+1) / Gamma(n+s+2).
  return std::exp(std::lgamma(n + 1.0) + std::lgamma(s_ + 1.0) - std::lgamma(n + s_ + 2.0));
}

double WeightScheme::monomial_norm_sq(const Monomial& alpha) const {
  double p = 1.0;
  for (int i = 0; i < alpha.num_vars(); ++i) p *= factor(alpha[i]);
  return p;
}

double WeightScheme::monomial_norm(const Monomial& alpha) const {
  return std::sqrt(monomial_norm_sq(alpha));
}

std::string WeightScheme::str() const {
  if (kind_ == Kind::Hardy) return "hardy";
  return "bergman(s=" + std::to_string(s_) + ")";
}

}  // namespace ennorm
