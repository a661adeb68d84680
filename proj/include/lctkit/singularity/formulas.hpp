#pragma once

#include <cstdint>
#include <span>

#include "lctkit/core/polynomial.hpp"
#include "lctkit/core/rational.hpp"
#include "lctkit/core/weight_vector.hpp"

namespace lctkit {

/// Threshold sum_i 1/m_i of the pure-power system (x_1^{m_1}, ..., x_n^{m_n}).
Rational weighted_lct(std::span<const std::uint32_t> exponents);

/// c * w(f) <= w(x_1 ... x_n). False for the zero polynomial.
bool weight_criterion(const Rational& c, const Polynomial& f, const WeightVector& w);

/// (a+b)^2 / (a b c^2). Never below 4/c^2, with equality iff a = b.
Rational corti_intersection_bound(const Rational& a, const Rational& b, const Rational& c);

/// Discrepancy r - 1 - c*mult of the exceptional divisor of one blow-up along
/// a smooth centre of codimension r >= 2.
Rational blowup_margin(unsigned codimension, const Rational& c, const Rational& multiplicity);

/// Necessary for (X, c|M|) canonical: margin >= 0.
bool canonical_necessary(unsigned codimension, const Rational& c, const Rational& multiplicity);
/// Necessary for (X, c|M|) log canonical: margin >= -1.
bool log_canonical_necessary(unsigned codimension, const Rational& c, const Rational& multiplicity);

}  // namespace lctkit
