#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lctkit/core/extended.hpp"
#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

enum class Singularity { LogCanonical, NotLogCanonical };

const char* to_string(Singularity s);

struct ThresholdVerdict {
  Rational coefficient;
  Extended<Rational> threshold;
  Singularity verdict;
  /// Facet normal or weight vector that certifies the threshold.
  std::optional<std::string> witness;
};

/// verdict is log canonical iff c <= threshold.
ThresholdVerdict make_verdict(const Rational& c, const Extended<Rational>& threshold,
                              std::optional<std::string> witness = std::nullopt);

/// Newton-polyhedron verdict; the witness is the central-face normal.
ThresholdVerdict monomial_verdict(const MonomialIdeal& ideal, const Rational& c);

/// Pure-power verdict; the witness is the weight vector (1/m_1, ..., 1/m_n).
ThresholdVerdict pure_power_verdict(std::span<const std::uint32_t> exponents, const Rational& c);

}  // namespace lctkit
