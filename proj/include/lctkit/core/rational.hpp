#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace lctkit {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. Values whose
/// numerator and denominator fit in 64 bits are stored inline; larger ones
/// move to GMP.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) {
    if (static_cast<long long>(value) == INT64_MIN)
      assign_big(mpq_class(static_cast<long>(value)));
    else
      num_ = static_cast<std::int64_t>(value);
  }

  template <std::unsigned_integral T>
  Rational(T value) {
    if (static_cast<unsigned long long>(value) > static_cast<unsigned long long>(INT64_MAX))
      assign_big(mpq_class(static_cast<unsigned long>(value)));
    else
      num_ = static_cast<std::int64_t>(value);
  }

  Rational(long numerator, long denominator);
  explicit Rational(const BigInt& value);
  Rational(const BigInt& numerator, const BigInt& denominator);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
  }
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept = default;

  /// Accepts "p", "-p" or "p/q" with q > 0. Surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", including "p/1" for integers.
  std::string fraction() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.big_ && b.big_ && *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const int c = compare_slow(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static int compare_slow(const Rational& a, const Rational& b);
  static Rational from_wide(__int128 numerator, __int128 denominator);
  static Rational from_mpq(mpq_class value);
  mpq_class to_mpq() const;
  void assign_big(mpq_class value);

  // Inline value num_/den_ unless big_ is set, in which case num_ = 0, den_ = 1.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

BigInt binomial(unsigned long n, unsigned long k);
BigInt power(unsigned long base, unsigned long exponent);

}  // namespace lctkit
