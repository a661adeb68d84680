#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/polynomial.hpp"

namespace lctkit {

/// Ordered variable names. Variables are positional; names only matter to the
/// parser and printer.
class VariableList {
 public:
  explicit VariableList(std::vector<std::string> names);
  /// Comma-separated names, e.g. "x,y,z".
  static VariableList parse(std::string_view text);
  /// x, y, z, w first (in that order), then any other identifier
  /// alphabetically.
  static VariableList infer(std::string_view text);
  /// x, y, z, w for n <= 4, otherwise x1, ..., xn.
  static VariableList standard(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

// Grammar (whitespace insignificant):
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := coeff | [coeff '*'] factor ('*' factor)*
//   factor     := var ['^' natural]
//   coeff      := integer | integer '/' positive-integer
Polynomial parse_polynomial(std::string_view text, const VariableList& vars);

/// Comma-separated polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const VariableList& vars);

/// Comma-separated monomials with coefficient omitted or 1; the result is
/// minimalized.
MonomialIdeal parse_monomial_ideal(std::string_view text, const VariableList& vars);

std::string to_string(const Polynomial& p, const VariableList& vars);
std::string to_string(const ExponentVector& e, const VariableList& vars);
std::string to_string(const MonomialIdeal& ideal, const VariableList& vars);

}  // namespace lctkit
