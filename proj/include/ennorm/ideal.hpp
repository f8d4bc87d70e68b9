#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "ennorm/groebner.hpp"
#include "ennorm/hilbert.hpp"
#include "ennorm/polynomial.hpp"

namespace ennorm {

/// Polynomial ideal with cached reduced Groebner bases per monomial order.
/// Values are immutable; copies share the cache.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}
  Ideal(int num_vars, std::vector<Polynomial> gens);

  int num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  /// Ideal membership via normal form against the grevlex basis.
  bool contains(const Polynomial& f) const;
  /// True when the reduced basis is {1}.
  bool is_unit_ideal() const;
  bool equals(const Ideal& other) const;

  std::string str() const;

 private:
  int num_vars_;
  std::vector<Polynomial> gens_;
  bool homogeneous_;
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// {g : g*f in a}; f must be nonzero.
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);
/// {g : g*f^n in a for some n}; iterated quotients until stabilization.
Ideal saturate(const Ideal& a, const Polynomial& f);

/// True iff f lies in the radical of a (auxiliary-variable trick).
bool radical_membership(const Polynomial& f, const Ideal& a);

/// Hilbert series of the quotient ring ring/a; requires a homogeneous.
HilbertSeries hilbert_series(const Ideal& a);
long long hilbert_function(const Ideal& a, int n);

struct KrullDimension {
  bool empty_variety = false;  // a = (1)
  int dim = 0;                 // dimension of the affine cone otherwise
};
KrullDimension krull_dimension(const Ideal& a);

}  // namespace ennorm
