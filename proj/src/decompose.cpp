#include "ennorm/decompose.hpp"

#include <stdexcept>

namespace ennorm {

Ideal line_prime(const Line& u) {
  if (!u.exact) throw std::invalid_argument("line_prime needs an exact line");
  int d = u.num_vars();
  std::vector<Polynomial> gens;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Polynomial g = Polynomial::variable(d, i).scaled(u.direction[j]) -
                     Polynomial::variable(d, j).scaled(u.direction[i]);
      if (!g.is_zero()) gens.push_back(g);
    }
  return Ideal(d, std::move(gens));
}

Ideal radical_from_lines(const Ideal& a, std::span<const Line> lines) {
  if (lines.empty()) throw std::invalid_argument("radical_from_lines needs lines");
  Ideal result = line_prime(lines[0]);
  for (size_t k = 1; k < lines.size(); ++k)
    result = ideal_intersect(result, line_prime(lines[k]));
  // Verify both inclusions.
  for (const auto& g : result.gens())
    if (!radical_membership(g, a))
      throw std::logic_error("radical_from_lines: certificate failed (missing line?)");
  for (const auto& g : a.gens())
    if (!result.contains(g))
      throw std::logic_error("radical_from_lines: input not contained in radical");
  return result;
}

std::vector<PrimaryComponent> isolated_primary_components(const Ideal& a,
                                                          std::span<const Line> lines) {
  int d = a.num_vars();
  std::vector<Ideal> primes;
  for (const auto& l : lines) primes.push_back(line_prime(l));

  std::vector<PrimaryComponent> out;
  for (size_t j = 0; j < lines.size(); ++j) {
    // Separator: one linear form from each other line's prime avoiding prime_j.
    Polynomial sep = Polynomial::constant(d, GaussianRational(1));
    for (size_t l = 0; l < lines.size(); ++l) {
      if (l == j) continue;
      const Polynomial* pick = nullptr;
      for (const auto& g : primes[l].gens())
        if (!primes[j].contains(g)) {
          pick = &g;
          break;
        }
      if (!pick) throw std::logic_error("no separator between distinct lines");
      sep = sep * *pick;
    }
    Ideal component = sep.is_constant() ? a : saturate(a, sep);

    // Component invariants: contained in the prime, radical equal to the prime.
    for (const auto& g : component.gens())
      if (!primes[j].contains(g)) throw std::logic_error("component not inside its line prime");
    for (const auto& g : primes[j].gens())
      if (!radical_membership(g, component))
        throw std::logic_error("component radical differs from its line prime");

    out.push_back(PrimaryComponent{lines[j], std::move(component), primes[j]});
  }
  return out;
}

long long embedded_defect(const Ideal& a, std::span<const PrimaryComponent> components) {
  if (components.empty()) throw std::invalid_argument("no components");
  Ideal meet = components[0].component;
  for (size_t k = 1; k < components.size(); ++k)
    meet = ideal_intersect(meet, components[k].component);
  for (const auto& g : a.gens())
    if (!meet.contains(g)) throw std::logic_error("components do not contain the input ideal");

  HilbertSeries diff = hilbert_series(a).minus(hilbert_series(meet));
  if (!diff.is_polynomial())
    throw std::logic_error("infinite embedded defect: decomposition inconsistency");
  return diff.total();
}

}  // namespace ennorm
