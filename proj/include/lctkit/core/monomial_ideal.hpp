#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lctkit/core/exponent_vector.hpp"

namespace lctkit {

/// Monomial ideal held by its minimal generators, sorted lexicographically so
/// that equality is structural. Never empty; the unit ideal is {(0,...,0)}.
class MonomialIdeal {
 public:
  /// Keeps the divisibility-minimal vectors. Throws DomainError on empty input
  /// and DimensionMismatch on mixed lengths.
  static MonomialIdeal minimalize(std::span<const ExponentVector> raw);
  static MonomialIdeal minimalize(std::initializer_list<ExponentVector> raw);
  static MonomialIdeal unit(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }
  bool is_unit() const;

  /// x^e lies in the ideal.
  bool contains(const ExponentVector& e) const;
  /// Every generator of *this is divisible by a generator of other.
  bool is_contained_in(const MonomialIdeal& other) const;

  /// Exponent of the pure power of each variable among the generators, if
  /// every variable has one (the ideal is then zero-dimensional).
  std::optional<std::vector<ExponentVector::value_type>> pure_powers() const;
  bool is_zero_dimensional() const { return pure_powers().has_value(); }

  /// I^r, generated by all r-fold sums of generators.
  MonomialIdeal power(unsigned r) const;
  MonomialIdeal product(const MonomialIdeal& other) const;
  /// Applies a permutation of variables: variable i moves to position perm[i].
  MonomialIdeal permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t dimension, std::vector<ExponentVector> generators)
      : dimension_(dimension), generators_(std::move(generators)) {}

  std::size_t dimension_ = 0;
  std::vector<ExponentVector> generators_;
};

}  // namespace lctkit
