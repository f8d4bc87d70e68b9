#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ennorm/ideal.hpp"

namespace ennorm {

/// A disc variety V_u = {lambda*u : lambda in D}: a canonical boundary
/// direction u with max modulus exactly 1 and first Lambda-coordinate 1.
struct Line {
  bool exact = false;
  std::vector<GaussianRational> direction;            // canonical, when exact
  std::vector<std::complex<double>> direction_num;    // always set
  std::vector<int> lambda;                            // 0-based indices with |u_i| = 1
  double eps = 0.0;                                   // tolerance used when numeric

  int num_vars() const { return static_cast<int>(direction_num.size()); }
  std::string canonical_key() const;
  std::string str() const;
};

/// Exact canonicalization: scale so the first coordinate of maximal modulus
/// becomes exactly 1; Lambda recomputed from exact squared moduli.
Line normalize_direction(std::span<const GaussianRational> v);
Line normalize_direction_numeric(std::span<const std::complex<double>> v, double eps = 1e-8);

struct LineExtraction {
  std::vector<Line> lines;
  bool all_exact = true;
  /// The intersection of the line primes passed the radical-membership
  /// completeness certificate (only checked when all lines are exact).
  bool complete_certified = false;
  std::string note;
};

/// Lines of a one-dimensional homogeneous variety via chart-wise
/// dehomogenization, lex triangularization and univariate root isolation;
/// roots are rationalized and verified exactly, with a numeric fallback.
LineExtraction extract_lines(const Ideal& a);

struct ConditionAResult {
  bool holds = true;
  struct Witness {
    int line_i = 0, line_j = 0;
    std::vector<GaussianRational> sub_i, sub_j;  // the dependent Lambda-subvectors
  };
  std::optional<Witness> witness;
};

/// Condition A: pairs of lines with equal Lambda sets must have linearly
/// independent Lambda-subvectors (exact 2x2 minors).
ConditionAResult condition_A(std::span<const Line> lines);

}  // namespace ennorm
