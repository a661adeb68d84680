#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "lctkit/core/error.hpp"

namespace lctkit {

/// A value of T or +infinity. Infinity compares above every finite value.
template <typename T>
class Extended {
 public:
  Extended(T value) : value_(std::move(value)) {}
  static Extended infinity() { return Extended(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }

  const T& value() const {
    if (!value_) throw DomainError("value is +infinity");
    return *value_;
  }

  std::string str() const {
    if (!value_) return "inf";
    std::ostringstream os;
    os << *value_;
    return os.str();
  }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (!a.value_ || !b.value_) {
      if (!a.value_ && !b.value_) return std::strong_ordering::equal;
      return a.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.str(); }

 private:
  Extended() = default;
  std::optional<T> value_;
};

}  // namespace lctkit
