#include "lctkit/initial/initial_ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "lctkit/core/error.hpp"
#include "lctkit/newton/threshold.hpp"

namespace lctkit {

namespace {

using Row = std::map<std::size_t, Rational>;

void enumerate_monomials(std::size_t index, std::uint32_t budget, ExponentVector& current,
                         std::vector<ExponentVector>& out) {
  if (index + 1 == current.size()) {
    for (std::uint32_t k = 0; k <= budget; ++k) {
      current[index] = k;
      out.push_back(current);
    }
    current[index] = 0;
    return;
  }
  for (std::uint32_t k = 0; k <= budget; ++k) {
    current[index] = k;
    enumerate_monomials(index + 1, budget - k, current, out);
  }
  current[index] = 0;
}

/// All monomials of degree <= max_degree, ascending in the term order.
std::vector<ExponentVector> ranked_monomials(std::size_t n, std::uint32_t max_degree, const TermOrder& order) {
  std::vector<ExponentVector> all;
  ExponentVector current(n);
  enumerate_monomials(0, max_degree, current, all);
  if (order.is_lex()) {
    std::sort(all.begin(), all.end());
    return all;
  }
  std::vector<std::pair<Rational, ExponentVector>> keyed;
  keyed.reserve(all.size());
  for (auto& e : all) keyed.emplace_back(order.weights()->weigh(e), std::move(e));
  std::sort(keyed.begin(), keyed.end());
  all.clear();
  for (auto& [w, e] : keyed) all.push_back(std::move(e));
  return all;
}

class Echelon {
 public:
  explicit Echelon(std::size_t size) : pivots_(size) {}

  /// Reduces row against the stored pivots; stores the remainder if nonzero.
  /// Returns true when the row was new.
  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const Rational lead = row.begin()->second;
    if (lead != 1)
      for (auto& [k, v] : row) v /= lead;
    const std::size_t rank = row.begin()->first;
    pivots_[rank] = std::move(row);
    return true;
  }

  bool spans(Row row) {
    reduce(row);
    return row.empty();
  }

  bool is_pivot(std::size_t rank) const { return !pivots_[rank].empty(); }

 private:
  void reduce(Row& row) const {
    while (!row.empty()) {
      const auto lead = row.begin();
      const Row& pivot = pivots_[lead->first];
      if (pivot.empty()) return;
      const Rational factor = lead->second;
      for (const auto& [k, v] : pivot) {
        auto [it, inserted] = row.try_emplace(k);
        it->second -= factor * v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  }

  std::vector<Row> pivots_;
};

void validate(std::span<const Polynomial> generators) {
  if (generators.empty()) throw DomainError("at least one generator is required");
  const std::size_t n = generators.front().dimension();
  if (n == 0) throw DomainError("generators need at least one variable");
  for (const auto& g : generators) {
    require_same_dimension(n, g.dimension());
    if (g.is_zero()) throw DomainError("generators must be nonzero");
  }
}

std::uint64_t min_order(std::span<const Polynomial> generators) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& g : generators) best = std::min(best, order_at_origin(g).value());
  return best;
}

struct Reduction {
  std::vector<ExponentVector> monomials;
  std::vector<bool> pivot;
  bool saturated = false;
};

Reduction reduce_truncation(std::span<const Polynomial> generators, const TermOrder& order,
                            std::uint32_t truncation) {
  validate(generators);
  if (truncation == 0) throw DomainError("truncation degree must be at least 1");
  if (order.weights()) require_same_dimension(generators.front().dimension(), order.weights()->size());
  const std::size_t n = generators.front().dimension();

  Reduction out;
  out.monomials = ranked_monomials(n, truncation - 1, order);
  std::unordered_map<ExponentVector, std::size_t> rank;
  rank.reserve(out.monomials.size());
  for (std::size_t i = 0; i < out.monomials.size(); ++i) rank.emplace(out.monomials[i], i);

  // Shifts x^a g with |a| + ord(g) < N span the image; feed them by
  // increasing shift degree so that most late rows collapse to zero early.
  Echelon echelon(out.monomials.size());
  std::vector<ExponentVector> shifts;
  ExponentVector current(n);
  enumerate_monomials(0, truncation - 1, current, shifts);
  std::stable_sort(shifts.begin(), shifts.end(),
                   [](const ExponentVector& a, const ExponentVector& b) { return a.degree() < b.degree(); });
  for (const auto& shift : shifts)
    for (const auto& g : generators) {
      if (order_at_origin(g).value() + shift.degree() >= truncation) continue;
      Row row;
      for (const auto& [e, c] : g.terms()) {
        const ExponentVector moved = e + shift;
        if (moved.degree() < truncation) row.emplace(rank.at(moved), c);
      }
      echelon.insert(std::move(row));
    }

  out.pivot.resize(out.monomials.size());
  for (std::size_t i = 0; i < out.monomials.size(); ++i) out.pivot[i] = echelon.is_pivot(i);

  out.saturated = true;
  for (std::size_t i = 0; i < out.monomials.size() && out.saturated; ++i)
    if (out.monomials[i].degree() + 1 == truncation) out.saturated = echelon.spans(Row{{i, Rational(1)}});
  return out;
}

TruncationCertificate certificate_of(const Reduction& r, std::uint32_t truncation) {
  TruncationCertificate cert;
  cert.truncation = truncation;
  for (std::size_t i = 0; i < r.monomials.size(); ++i)
    if (!r.pivot[i]) {
      const auto d = static_cast<std::uint32_t>(r.monomials[i].degree());
      cert.max_standard_degree = std::max(cert.max_standard_degree.value_or(0), d);
    }
  cert.status = r.saturated ? CertificateStatus::Certified : CertificateStatus::Heuristic;
  return cert;
}

InitialIdeal from_reduction(const Reduction& r, std::uint32_t truncation) {
  std::vector<ExponentVector> pivots;
  std::uint64_t standard = 0;
  for (std::size_t i = 0; i < r.monomials.size(); ++i) {
    if (r.pivot[i])
      pivots.push_back(r.monomials[i]);
    else
      ++standard;
  }
  if (pivots.empty())
    throw LimitExceeded("truncation degree " + std::to_string(truncation) + " is below the order of every generator");
  return InitialIdeal{MonomialIdeal::minimalize(pivots), certificate_of(r, truncation), standard};
}

template <class Step>
void for_each_truncation(std::span<const Polynomial> generators, const TruncationPolicy& policy, Step step) {
  validate(generators);
  if (policy.start == 0 || policy.cap < policy.start) throw DomainError("invalid truncation policy");
  const std::uint64_t floor = min_order(generators) + 2;
  std::uint64_t n = std::max<std::uint64_t>(policy.start, floor);
  if (n > policy.cap)
    throw LimitExceeded("generators vanish to order above the truncation cap " + std::to_string(policy.cap));
  while (true) {
    if (step(static_cast<std::uint32_t>(n))) return;
    if (n == policy.cap) break;
    n = std::min<std::uint64_t>(2 * n, policy.cap);
  }
}

}  // namespace

const char* to_string(CertificateStatus s) { return s == CertificateStatus::Certified ? "certified" : "heuristic"; }

const char* to_string(SemiVerdict v) { return v == SemiVerdict::LogCanonical ? "log-canonical" : "unknown"; }

const char* to_string(InitialSource s) {
  switch (s) {
    case InitialSource::Principal: return "principal";
    case InitialSource::Certified: return "certified";
    case InitialSource::SoundPivots: return "sound-pivots";
  }
  return "?";
}

TruncatedImage truncated_image(std::span<const Polynomial> generators, const TermOrder& order,
                               std::uint32_t truncation) {
  const auto r = reduce_truncation(generators, order, truncation);
  TruncatedImage image;
  image.truncation = truncation;
  image.saturated = r.saturated;
  for (std::size_t i = 0; i < r.monomials.size(); ++i)
    (r.pivot[i] ? image.pivots : image.standard).push_back(r.monomials[i]);
  return image;
}

InitialIdeal initial_ideal(std::span<const Polynomial> generators, const TermOrder& order, std::uint32_t truncation) {
  const auto r = reduce_truncation(generators, order, truncation);
  return from_reduction(r, truncation);
}

InitialIdeal certified_initial_ideal(std::span<const Polynomial> generators, const TermOrder& order,
                                     const TruncationPolicy& policy) {
  std::optional<InitialIdeal> result;
  for_each_truncation(generators, policy, [&](std::uint32_t n) {
    auto candidate = initial_ideal(generators, order, n);
    if (!candidate.certificate.certified()) return false;
    result = std::move(candidate);
    return true;
  });
  if (!result)
    throw LimitExceeded("truncation not certified up to degree " + std::to_string(policy.cap) +
                        "; the ideal may not vanish only at the origin");
  return std::move(*result);
}

std::uint64_t local_dim(std::span<const Polynomial> generators, const TermOrder& order,
                        const TruncationPolicy& policy) {
  return certified_initial_ideal(generators, order, policy).standard_count;
}

Semidecision lc_semidecide(std::span<const Polynomial> generators, const Rational& c, const TermOrder& order,
                           const TruncationPolicy& policy) {
  validate(generators);
  if (c.sign() <= 0) throw DomainError("coefficient c must be positive");
  Semidecision out;
  auto decide = [&](MonomialIdeal ideal) {
    out.threshold = lct(ideal);
    out.verdict = is_log_canonical(ideal, c) ? SemiVerdict::LogCanonical : SemiVerdict::Unknown;
    out.initial = std::move(ideal);
  };

  if (generators.size() == 1) {
    out.source = InitialSource::Principal;
    decide(MonomialIdeal::minimalize({order.lowest_term(generators.front())}));
    return out;
  }

  std::optional<InitialIdeal> certified;
  Reduction last;
  std::uint32_t last_truncation = 0;
  for_each_truncation(generators, policy, [&](std::uint32_t n) {
    last = reduce_truncation(generators, order, n);
    last_truncation = n;
    if (!last.saturated) return false;
    certified = from_reduction(last, n);
    return true;
  });
  if (certified) {
    out.source = InitialSource::Certified;
    out.certificate = certified->certificate;
    decide(certified->ideal);
    return out;
  }
  if (order.is_lex())
    throw LimitExceeded("truncation not certified up to degree " + std::to_string(policy.cap) +
                        " and the lex order gives no sound partial initial ideal");

  const auto& w = *order.weights();
  const Rational bound = Rational(last_truncation) * *std::min_element(w.weights().begin(), w.weights().end());
  std::vector<ExponentVector> sound;
  for (std::size_t i = 0; i < last.monomials.size(); ++i)
    if (last.pivot[i] && w.weigh(last.monomials[i]) < bound) sound.push_back(last.monomials[i]);
  out.source = InitialSource::SoundPivots;
  out.certificate = certificate_of(last, last_truncation);
  if (sound.empty()) return out;
  decide(MonomialIdeal::minimalize(sound));
  return out;
}

std::vector<Polynomial> weight_initial_forms(std::span<const Polynomial> generators, const WeightVector& w) {
  std::vector<Polynomial> out;
  for (const auto& g : generators) {
    require_same_dimension(w.size(), g.dimension());
    Polynomial form(g.dimension());
    const auto lowest = weight_of(g, w);
    if (lowest.is_finite())
      for (const auto& [e, c] : g.terms())
        if (w.weigh(e) == lowest.value()) form.add_term(e, c);
    out.push_back(std::move(form));
  }
  return out;
}

}  // namespace lctkit
