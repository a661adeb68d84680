#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

struct Universe {
  std::uint64_t n = 0;
  std::uint64_t box = 0;
  std::string description;

  friend bool operator==(const Universe&, const Universe&) = default;
};

struct VerificationFailure {
  std::string ideal;
  std::optional<Rational> c;
  /// Which check failed, e.g. "simplex-count" or "properness".
  std::string check;
  std::string reason;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  std::string suite;
  Universe universe;
  std::uint64_t instances_checked = 0;
  std::vector<VerificationFailure> failures;
  /// Suite-specific counts and extremes, as strings.
  std::map<std::string, std::string> statistics;
  /// Deterministic summary; wall-clock time is never recorded here.
  std::string runtime_note;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Largest number of lattice points in the enumerated box.
inline constexpr std::uint64_t verification_guard = 64;

/// The c-grid k/12, 1 <= k <= 36.
std::vector<Rational> lemma_grid();

/// Runs over zero_dimensional_universe(n, B). For every ideal that is not log
/// canonical at c = 1: the central normal a
/// exists, no lattice point of its simplex lies in the Newton polyhedron, and
/// colength >= simplex_count(a) >= ceil((3^n + 1)/2).
VerificationReport verify_colength_theorem(std::size_t n, std::uint32_t box);
VerificationReport verify_colength_instances(std::span<const MonomialIdeal> ideals);

/// Runs over antichain_universe(n, B). For every ideal and c on the grid: J+(I^c) is trivial iff c <= lct(I), and
/// J+(J+(I^c)) is proper whenever c/2 > lct(I).
VerificationReport verify_multiplier_lemmas(std::size_t n, std::uint32_t box,
                                            std::span<const Rational> grid);
VerificationReport verify_multiplier_instances(std::span<const MonomialIdeal> ideals,
                                               std::span<const Rational> grid);

}  // namespace lctkit
