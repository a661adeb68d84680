#pragma once

#include <optional>
#include <string>

#include "lctkit/core/exponent_vector.hpp"
#include "lctkit/core/polynomial.hpp"
#include "lctkit/core/weight_vector.hpp"

namespace lctkit {

/// Order used to pick the lowest term of a polynomial. The lex part compares
/// the first variable first, so with variables (x, y) we get 1 < y < y^2 < x.
/// A weight order compares weights first and falls back to lex on ties.
class TermOrder {
 public:
  static TermOrder lex_lowest() { return TermOrder(std::nullopt); }
  static TermOrder weight_then_lex(WeightVector w) { return TermOrder(std::move(w)); }

  bool is_lex() const { return !weights_.has_value(); }
  const std::optional<WeightVector>& weights() const { return weights_; }
  /// All weights equal, so lower terms never have higher total degree.
  bool is_degree_compatible() const;

  /// a strictly below b.
  bool less(const ExponentVector& a, const ExponentVector& b) const;
  ExponentVector lowest_term(const Polynomial& p) const;

  /// "lexlow" or "weight(3,2)".
  std::string str() const;

 private:
  explicit TermOrder(std::optional<WeightVector> w) : weights_(std::move(w)) {}
  std::optional<WeightVector> weights_;
};

}  // namespace lctkit
