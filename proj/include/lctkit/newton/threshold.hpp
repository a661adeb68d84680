#pragma once

#include "lctkit/core/extended.hpp"
#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

/// Log canonical threshold 1/xi of a monomial ideal; +infinity for the unit
/// ideal.
Extended<Rational> lct(const MonomialIdeal& ideal);

/// c <= lct(I), closed at the threshold.
bool is_log_canonical(const MonomialIdeal& ideal, const Rational& c);

}  // namespace lctkit
