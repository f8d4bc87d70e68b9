#pragma once

#include <complex>
#include <span>
#include <stdexcept>

#include "ennorm/graded_basis.hpp"
#include "ennorm/variety.hpp"

namespace ennorm {

struct WindowSpec {
  int start = 0;
  int width = 3;
};

/// Spectral norms of the window-restricted blocks of [S_{z_i}^*, S_{z_j}].
/// Windows must satisfy start + width <= max_degree - 1 (the boundary block
/// of the truncation is discarded).
std::vector<double> commutator_tail_norms(const CompressionMatrices& m, int var_i, int var_j,
                                          std::span<const WindowSpec> windows);

/// Raised when the requested radii cannot be certified by a feasible
/// truncation.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BerezinCurve {
  std::vector<double> values;  // one per radius
  int truncation_degree = 0;
};

/// Berezin transform of [S_f^*, S_f] against the projected reproducing kernel
/// along a ray inside the variety: value(r) =
/// <[S_f^*,S_f] P k_{r dir}, P k_{r dir}> / ||P k_{r dir}||^2. The truncation
/// degree is chosen adaptively so the kernel tail stays below 1e-8 of its
/// norm at the largest radius.
BerezinCurve berezin_commutator_curve(const Ideal& a, const Polynomial& f,
                                      std::span<const std::complex<double>> ray_direction,
                                      std::span<const double> radii, const GradedBasis& basis);

struct FredholmIndex {
  int index = 0;
  bool stable = false;
  std::vector<int> history;  // estimates at n_max-2, n_max-1, n_max
};

/// Fredholm index estimate of S_h, h = |Lambda|^{-1} sum conj(u_i) z_i, from
/// graded block ranks (null spaces by singular-value thresholding at 1e-8);
/// stable once three consecutive truncations agree.
FredholmIndex fredholm_index_estimate(const Ideal& component, const Line& u, int n_max,
                                      WeightScheme w);

/// Spectral norm of P_{N_a} P_{N_b} restricted to degrees [n, n+width].
double asymptotic_orthogonality_norm(const Ideal& a, const Ideal& b, int degree, WeightScheme w,
                                     int width = 3);

/// Smallest eigenvalue of the window restriction of
/// sum_i (lambda_i - S_{z_i})(lambda_i - S_{z_i})^* per grid point.
std::vector<double> essential_spectrum_probe(
    const CompressionMatrices& m, std::span<const std::vector<std::complex<double>>> grid,
    WindowSpec window);

/// Operator norm of (M_{z_i} - S_{z_i}) restricted to N_n: the part of
/// multiplication that leaves the module.
double multiplier_projection_defect(const GradedBasis& basis, int var, int n);

}  // namespace ennorm
