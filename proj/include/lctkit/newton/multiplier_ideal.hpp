#pragma once

#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

/// Upper multiplier ideal J+(I^c): x^v is a member iff v + (1,...,1) lies in
/// the closed polyhedron c * P(I). Equals J(I^c') for c' slightly below c.
MonomialIdeal multiplier_ideal_plus(const MonomialIdeal& ideal, const Rational& c);

/// Ordinary multiplier ideal J(I^c): v + (1,...,1) in the interior of c * P(I).
MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const Rational& c);

}  // namespace lctkit
