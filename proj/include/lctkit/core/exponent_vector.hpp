#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace lctkit {

/// Exponents (i_1, ..., i_n) of a monomial. Vectors of different lengths are
/// incomparable: ordering or combining them throws DimensionMismatch.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t dimension) : entries_(dimension, 0) {}
  ExponentVector(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t dimension, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<value_type>& entries() const { return entries_; }

  std::uint64_t degree() const;
  bool is_zero() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector& operator+=(const ExponentVector& rhs);
  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) { return lhs += rhs; }

  /// Componentwise maximum (exponent of the lcm).
  ExponentVector lcm(const ExponentVector& other) const;

  /// Lexicographic, x_1 most significant.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector& a, const ExponentVector& b);

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

 private:
  std::vector<value_type> entries_;
};

void require_same_dimension(std::size_t expected, std::size_t actual);

}  // namespace lctkit

template <>
struct std::hash<lctkit::ExponentVector> {
  std::size_t operator()(const lctkit::ExponentVector& e) const noexcept {
    std::size_t h = e.size();
    for (auto v : e) h = h * 1000003u ^ v;
    return h;
  }
};
