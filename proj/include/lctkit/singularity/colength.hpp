#pragma once

#include <cstdint>

#include "lctkit/core/extended.hpp"
#include "lctkit/core/monomial_ideal.hpp"

namespace lctkit {

/// dim R/I: the number of monomials outside the ideal. Finite exactly when
/// every variable has a pure power among the generators; +infinity otherwise.
Extended<std::uint64_t> colength(const MonomialIdeal& ideal);

}  // namespace lctkit
