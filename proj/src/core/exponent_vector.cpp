#include "lctkit/core/exponent_vector.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"

namespace lctkit {

void require_same_dimension(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

ExponentVector ExponentVector::unit(std::size_t dimension, std::size_t index) {
  ExponentVector e(dimension);
  e.entries_.at(index) = 1;
  return e;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t d = 0;
  for (auto v : entries_) d += v;
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_dimension(size(), other.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& rhs) {
  require_same_dimension(size(), rhs.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  require_same_dimension(size(), other.size());
  ExponentVector r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = std::max(r.entries_[i], other.entries_[i]);
  return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  require_same_dimension(a.size(), b.size());
  return a.entries_ <=> b.entries_;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) {
  require_same_dimension(a.size(), b.size());
  return a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os << ')';
}

}  // namespace lctkit
