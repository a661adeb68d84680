#pragma once

#include <cstdint>
#include <span>

#include "lctkit/core/rational.hpp"

namespace lctkit {

/// d * prod m_i: the degree of a complete intersection of members of |m_i H|
/// on a hypersurface of degree d.
BigInt bezout_degree(std::uint64_t d, std::span<const std::uint64_t> multiples);

/// deg Z * deg W / deg X, unrounded. A non-integer value means the Lefschetz
/// hypotheses behind the formula cannot hold for the inputs.
Rational intersection_number(std::uint64_t deg_z, std::uint64_t deg_w, std::uint64_t deg_x);

/// deg W / deg X, the bound on the multiplicity of W along a curve.
Rational mult_bound(std::uint64_t deg_w, std::uint64_t deg_x);

/// (d-1)^r * deg Z after r residual steps on a hypersurface of degree d.
BigInt residual_degree(std::uint64_t d, std::uint64_t deg_z, std::uint64_t steps);

}  // namespace lctkit
