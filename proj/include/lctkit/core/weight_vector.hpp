#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lctkit/core/exponent_vector.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

/// Strictly positive weights (w(x_1), ..., w(x_n)).
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  WeightVector(std::initializer_list<Rational> weights)
      : WeightVector(std::vector<Rational>(weights)) {}

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// sum_i w_i e_i
  Rational weigh(const ExponentVector& e) const;
  /// w(x_1 ... x_n) = sum_i w_i
  Rational total() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> weights_;
};

}  // namespace lctkit
