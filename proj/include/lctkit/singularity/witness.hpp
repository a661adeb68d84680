#pragma once

#include <span>

#include "lctkit/core/exponent_vector.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

// Both witnesses take the coordinates and weights as given; no search for a
// good coordinate system is attempted.

/// Every monomial x^i y^j satisfies a*i + b*j > (a+b)/c.
bool surface_monomial_witness(std::span<const ExponentVector> monomials, const Rational& a,
                              const Rational& b, const Rational& c);

/// Every monomial x^i y^j z^k satisfies a*i + b*j + k > (a+b)/c, with the
/// weight of z fixed to 1.
bool kawakita_witness(std::span<const ExponentVector> monomials, const Rational& a, const Rational& b,
                      const Rational& c);

}  // namespace lctkit
