#include "lctkit/core/rational.hpp"

#include <cctype>
#include <numeric>

#include "lctkit/core/error.hpp"

namespace lctkit {

namespace {

using wide = __int128;
using uwide = unsigned __int128;

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt to_bigint(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

uwide gcd_wide(uwide a, uwide b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    const uwide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt bigint_from_wide(wide v) {
  const bool negative = v < 0;
  uwide magnitude = negative ? -static_cast<uwide>(v) : static_cast<uwide>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(magnitude), static_cast<std::uint64_t>(magnitude >> 64)};
  BigInt out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

bool fits(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 63;
}

}  // namespace

void Rational::assign_big(mpq_class value) {
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  if (fits(value.get_num()) && fits(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
  } else {
    r.assign_big(std::move(value));
  }
  return r;
}

Rational Rational::from_wide(wide numerator, wide denominator) {
  if (denominator < 0) numerator = -numerator, denominator = -denominator;
  const uwide magnitude = numerator < 0 ? -static_cast<uwide>(numerator) : static_cast<uwide>(numerator);
  const uwide g = gcd_wide(magnitude, static_cast<uwide>(denominator));
  if (g > 1) {
    numerator /= static_cast<wide>(g);
    denominator /= static_cast<wide>(g);
  }
  Rational r;
  if (numerator > INT64_MIN && numerator <= INT64_MAX && denominator <= INT64_MAX) {
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
  } else {
    mpq_class q(bigint_from_wide(numerator), bigint_from_wide(denominator));
    r.assign_big(std::move(q));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_)));
}

int Rational::compare_slow(const Rational& a, const Rational& b) { return cmp(a.to_mpq(), b.to_mpq()); }

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const BigInt& value) { *this = from_mpq(mpq_class(value)); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  *this = from_mpq(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s, true)) throw ParseError("invalid rational '" + std::string(s) + "'", 0);
    return Rational(to_bigint(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("invalid rational '" + std::string(s) + "'", slash);
  const BigInt d = to_bigint(den);
  if (d == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(to_bigint(num), d);
}

BigInt Rational::numerator() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }

BigInt Rational::denominator() const { return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_)); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  if (!big_) return from_wide(den_, num_);
  return from_mpq(1 / *big_);
}

BigInt Rational::floor() const {
  const mpq_class q = to_mpq();
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  const mpq_class q = to_mpq();
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return fraction();
}

std::string Rational::fraction() const { return numerator().get_str() + "/" + denominator().get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) return *this = from_wide(static_cast<wide>(num_) + rhs.num_, 1);
    return *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                             static_cast<wide>(den_) * rhs.den_);
  }
  return *this = from_mpq(to_mpq() + rhs.to_mpq());
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) return *this = from_wide(static_cast<wide>(num_) - rhs.num_, 1);
    return *this = from_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                             static_cast<wide>(den_) * rhs.den_);
  }
  return *this = from_mpq(to_mpq() - rhs.to_mpq());
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_)
    return *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
  return *this = from_mpq(to_mpq() * rhs.to_mpq());
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (!big_ && !rhs.big_)
    return *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
  return *this = from_mpq(to_mpq() / rhs.to_mpq());
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-*big_);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt power(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

}  // namespace lctkit
