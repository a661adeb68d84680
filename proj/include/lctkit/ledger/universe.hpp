#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lctkit/core/monomial_ideal.hpp"

namespace lctkit {

/// Zero-dimensional ideals whose staircase is a nonempty subset of [0,B]^n.
/// Their minimal generators lie in [0,B+1]^n. Ordered by the column heights
/// of the staircase.
std::vector<MonomialIdeal> zero_dimensional_universe(std::size_t n, std::uint32_t box);

/// Every monomial ideal whose minimal generators lie in [0,B]^n.
std::vector<MonomialIdeal> antichain_universe(std::size_t n, std::uint32_t box);

/// Visits every down-set of [0,side-1]^n as its height function on
/// [0,side-1]^(n-1), listed lexicographically.
void for_each_down_set(std::size_t n, std::uint32_t side,
                       const std::function<void(const std::vector<std::uint32_t>&)>& visit);

}  // namespace lctkit
