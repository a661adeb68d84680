#pragma once

#include <cstdint>
#include <string_view>

#include "lctkit/core/rational.hpp"

namespace lctkit {

enum class RigidityVerdict { Contradiction, Equality, NoContradiction };

const char* to_string(RigidityVerdict v);
RigidityVerdict rigidity_verdict_from_string(std::string_view text);

/// Quadrics on P^n against the lower bound 3^(n-1)/2 and its improvement by 3/2.
struct RigidityReport {
  std::uint64_t n = 0;
  BigInt h0;
  Rational bound_basic;
  Rational bound_improved;
  RigidityVerdict verdict = RigidityVerdict::NoContradiction;

  friend bool operator==(const RigidityReport&, const RigidityReport&) = default;
};

/// n >= 3.
RigidityReport rigidity_check(std::uint64_t n);

}  // namespace lctkit
