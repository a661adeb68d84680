#include "lctkit/singularity/witness.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"

namespace lctkit {

namespace {

bool all_above(std::span<const ExponentVector> monomials, std::span<const Rational> weights,
               const Rational& bound) {
  return std::all_of(monomials.begin(), monomials.end(), [&](const ExponentVector& e) {
    require_same_dimension(weights.size(), e.size());
    Rational w;
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * Rational(e[i]);
    return w > bound;
  });
}

void require_positive(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("weights must be positive");
  if (c.sign() <= 0) throw DomainError("coefficient must be positive");
}

}  // namespace

bool surface_monomial_witness(std::span<const ExponentVector> monomials, const Rational& a,
                              const Rational& b, const Rational& c) {
  require_positive(a, b, c);
  const Rational weights[] = {a, b};
  return all_above(monomials, weights, (a + b) / c);
}

bool kawakita_witness(std::span<const ExponentVector> monomials, const Rational& a, const Rational& b,
                      const Rational& c) {
  require_positive(a, b, c);
  const Rational weights[] = {a, b, Rational(1)};
  return all_above(monomials, weights, (a + b) / c);
}

}  // namespace lctkit
