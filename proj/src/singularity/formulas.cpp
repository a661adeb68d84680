#include "lctkit/singularity/formulas.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

Rational weighted_lct(std::span<const std::uint32_t> exponents) {
  if (exponents.empty()) throw DomainError("weighted_lct needs at least one exponent");
  Rational sum;
  for (auto m : exponents) {
    if (m == 0) throw DomainError("exponents must be positive");
    sum += Rational(1L, static_cast<long>(m));
  }
  return sum;
}

bool weight_criterion(const Rational& c, const Polynomial& f, const WeightVector& w) {
  const auto weight = weight_of(f, w);
  if (weight.is_infinite()) return false;
  return c * weight.value() <= w.total();
}

Rational corti_intersection_bound(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
    throw DomainError("corti_intersection_bound needs positive a, b, c");
  const Rational s = a + b;
  return s * s / (a * b * c * c);
}

Rational blowup_margin(unsigned codimension, const Rational& c, const Rational& multiplicity) {
  if (codimension < 2) throw DomainError("blow-up centre must have codimension >= 2");
  return Rational(codimension) - 1 - c * multiplicity;
}

bool canonical_necessary(unsigned codimension, const Rational& c, const Rational& multiplicity) {
  return blowup_margin(codimension, c, multiplicity).sign() >= 0;
}

bool log_canonical_necessary(unsigned codimension, const Rational& c, const Rational& multiplicity) {
  return blowup_margin(codimension, c, multiplicity) >= Rational(-1);
}

}  // namespace lctkit
