#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "lctkit/core/exponent_vector.hpp"
#include "lctkit/core/extended.hpp"
#include "lctkit/core/rational.hpp"
#include "lctkit/core/weight_vector.hpp"

namespace lctkit {

/// Polynomial over Q in a fixed number of positional variables. Only nonzero
/// coefficients are stored.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t dimension) : dimension_(dimension) {}

  static Polynomial monomial(const ExponentVector& e, const Rational& coefficient = 1);
  static Polynomial constant(std::size_t dimension, const Rational& value);

  std::size_t dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial shifted(const ExponentVector& e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t dimension_;
  TermMap terms_;
};

/// Lowest total degree of a term; +infinity for the zero polynomial.
Extended<std::uint64_t> order_at_origin(const Polynomial& p);

/// Lowest weight sum_i w_i e_i over the terms of p; +infinity for zero.
Extended<Rational> weight_of(const Polynomial& p, const WeightVector& w);

}  // namespace lctkit
