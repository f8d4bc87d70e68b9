#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ennorm/ideal.hpp"
#include "ennorm/weights.hpp"

namespace ennorm {

/// Positioned syntax error (1-based line/column).
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + message),
        line(line),
        col(col),
        message(message) {}
  int line;
  int col;
  std::string message;
};

/// Polynomial text grammar: variables z1..zd, operators + - * ^, the
/// imaginary unit token i, rational literals p/q, parentheses.
/// Example: (1/2 + 1/3*i)*z1^2 - z2*z3
Polynomial parse_polynomial(std::string_view text, int num_vars);

/// Parsed .ideal file.
struct IdealFile {
  std::string name;
  int num_vars = 0;
  WeightScheme weight = WeightScheme::hardy();
  std::string weight_s_text;  // exact bergman parameter as written
  std::vector<std::string> generator_sources;
  std::vector<Polynomial> generators;

  Ideal ideal() const { return Ideal(num_vars, generators); }

  /// Canonical serialization; parse -> print -> parse is a fixed point.
  std::string to_text() const;
};

/// Grammar: lines `ring vars = z1 z2 ... zd`, `weight = hardy | bergman s =
/// <rational>`, `gen = <poly>`, optional `name = <identifier>`, `#` comments.
IdealFile parse_ideal_file(std::string_view text, std::string default_name = "ideal");

IdealFile load_ideal_file(const std::string& path);

}  // namespace ennorm
