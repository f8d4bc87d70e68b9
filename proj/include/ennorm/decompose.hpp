#pragma once

#include <span>
#include <vector>

#include "ennorm/variety.hpp"

namespace ennorm {

/// Vanishing prime of the line {lambda*u}: generated by
/// { u_j z_i - u_i z_j : i < j }.
Ideal line_prime(const Line& u);

/// Radical of a dim-1 homogeneous ideal as the intersection of its line
/// primes; verified both ways (generators pass radical membership against a,
/// and a is contained in the result).
Ideal radical_from_lines(const Ideal& a, std::span<const Line> lines);

struct PrimaryComponent {
  Line line;
  Ideal component;
  Ideal prime;
};

/// Isolated line-supported components via saturation by separator products of
/// linear forms from the other lines' primes.
std::vector<PrimaryComponent> isolated_primary_components(const Ideal& a,
                                                          std::span<const Line> lines);

/// Graded dimension of (intersection of components)/a; asserts finiteness.
long long embedded_defect(const Ideal& a, std::span<const PrimaryComponent> components);

}  // namespace ennorm
