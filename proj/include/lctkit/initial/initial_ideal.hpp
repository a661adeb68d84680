#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lctkit/core/extended.hpp"
#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/polynomial.hpp"
#include "lctkit/initial/term_order.hpp"

namespace lctkit {

/// The image V of (g_1, ..., g_k) in R / m^N, reduced to semi-echelon form
/// with the lowest term of each row as pivot.
struct TruncatedImage {
  std::uint32_t truncation = 0;
  /// Non-pivot monomials of degree < N, ascending in the term order.
  std::vector<ExponentVector> standard;
  /// Pivot monomials, ascending in the term order.
  std::vector<ExponentVector> pivots;
  /// Every monomial of degree N-1 lies in V. Then m^(N-1) is inside the
  /// ideal and V is its whole image.
  bool saturated = false;
};

TruncatedImage truncated_image(std::span<const Polynomial> generators, const TermOrder& order,
                               std::uint32_t truncation);

enum class CertificateStatus { Certified, Heuristic };
const char* to_string(CertificateStatus s);

struct TruncationCertificate {
  std::uint32_t truncation = 0;
  /// Largest degree of a standard monomial; empty when there is none.
  std::optional<std::uint32_t> max_standard_degree;
  CertificateStatus status = CertificateStatus::Heuristic;

  bool certified() const { return status == CertificateStatus::Certified; }
};

struct InitialIdeal {
  MonomialIdeal ideal;
  TruncationCertificate certificate;
  std::uint64_t standard_count = 0;
};

/// Minimal generators of the pivot monomials. Certified when the truncated
/// image is saturated, which forces every standard monomial below degree N-1.
InitialIdeal initial_ideal(std::span<const Polynomial> generators, const TermOrder& order,
                           std::uint32_t truncation);

struct TruncationPolicy {
  std::uint32_t start = 4;
  std::uint32_t cap = 32;
};

/// Doubles N from policy.start until certified; throws LimitExceeded past policy.cap.
InitialIdeal certified_initial_ideal(std::span<const Polynomial> generators, const TermOrder& order,
                                     const TruncationPolicy& policy = {});

/// dim R/I at the origin.
std::uint64_t local_dim(std::span<const Polynomial> generators, const TermOrder& order = TermOrder::lex_lowest(),
                        const TruncationPolicy& policy = {});

enum class SemiVerdict { LogCanonical, Unknown };
const char* to_string(SemiVerdict v);

enum class InitialSource {
  /// One generator f: in(I) = (in(f)) exactly.
  Principal,
  /// Certified truncation.
  Certified,
  /// Weight order without certification: only the pivots of weight below
  /// N * min(w), which are lowest terms of genuine ideal elements.
  SoundPivots,
};
const char* to_string(InitialSource s);

struct Semidecision {
  SemiVerdict verdict = SemiVerdict::Unknown;
  InitialSource source = InitialSource::Principal;
  /// Monomial ideal contained in in(I) that was tested; empty if none was found.
  std::optional<MonomialIdeal> initial;
  Extended<Rational> threshold = Extended<Rational>(Rational(0));
  std::optional<TruncationCertificate> certificate;
};

/// Log canonical when the tested initial ideal is. Never concludes the
/// opposite. Throws LimitExceeded for a lex order that stays uncertified.
Semidecision lc_semidecide(std::span<const Polynomial> generators, const Rational& c, const TermOrder& order,
                           const TruncationPolicy& policy = {});

/// Sum of the terms of minimal w-weight of each generator.
std::vector<Polynomial> weight_initial_forms(std::span<const Polynomial> generators, const WeightVector& w);

}  // namespace lctkit
