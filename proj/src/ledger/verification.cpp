#include "lctkit/ledger/verification.hpp"

#include "lctkit/core/error.hpp"
#include "lctkit/core/parser.hpp"
#include "lctkit/lattice/bounds.hpp"
#include "lctkit/lattice/simplex.hpp"
#include "lctkit/ledger/universe.hpp"
#include "lctkit/newton/multiplier_ideal.hpp"
#include "lctkit/newton/newton_polyhedron.hpp"
#include "lctkit/newton/threshold.hpp"
#include "lctkit/singularity/colength.hpp"

namespace lctkit {

namespace {

void guard(std::size_t n, std::uint32_t side) {
  if (n == 0 || side <= 1) throw DomainError("verification needs n >= 1 and B >= 1");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= side;
    if (size > verification_guard)
      throw LimitExceeded("box exceeds the verification guard of " + std::to_string(verification_guard) + " points");
  }
}

std::string describe(const MonomialIdeal& ideal) {
  return to_string(ideal, VariableList::standard(ideal.dimension()));
}

std::string vector_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

struct Finding {
  std::string check;
  std::string reason;
};

std::optional<Finding> fail_colength(const MonomialIdeal& ideal, std::uint64_t& simplex_points) {
  const auto polyhedron = newton_polyhedron(ideal);
  const auto crossing = diagonal_crossing(polyhedron);
  if (!crossing) return Finding{"central-normal", "unit ideal reported as not log canonical"};
  const auto& a = crossing->canonical_normal;
  for (const auto& v : a)
    if (v.sign() <= 0) return Finding{"central-normal", "central normal " + vector_string(a) + " has a zero entry"};
  if (!is_supporting_normal(polyhedron, crossing->xi, a))
    return Finding{"central-normal", "central normal " + vector_string(a) + " does not support the polyhedron"};

  const SimplexSpec simplex(a);
  std::string inside;
  for_each_simplex_point(simplex, [&](const ExponentVector& r) {
    ++simplex_points;
    if (inside.empty() && polyhedron.contains(r))
      inside = to_string(r, VariableList::standard(r.size()));
  });
  if (!inside.empty()) return Finding{"disjointness", "simplex point " + inside + " lies in the Newton polyhedron"};

  const auto length = colength(ideal);
  if (length.is_infinite()) return Finding{"zero-dimensional", "ideal is not zero-dimensional"};
  const auto count = simplex_count(simplex);
  if (length.value() < count)
    return Finding{"simplex-count",
                   "colength " + std::to_string(length.value()) + " < simplex count " + std::to_string(count)};
  const Rational floor(bound_pairing_attained(static_cast<unsigned>(ideal.dimension())).ceil());
  if (Rational(length.value()) < floor)
    return Finding{"pairing-bound", "colength " + std::to_string(length.value()) + " < " + floor.str()};
  return std::nullopt;
}

}  // namespace

std::vector<Rational> lemma_grid() {
  std::vector<Rational> grid;
  for (long k = 1; k <= 36; ++k) grid.emplace_back(k, 12L);
  return grid;
}

VerificationReport verify_colength_instances(std::span<const MonomialIdeal> ideals) {
  VerificationReport report;
  report.suite = "colength";
  std::uint64_t non_lc = 0, simplex_points = 0;
  std::optional<std::uint64_t> smallest;
  std::string smallest_ideal;
  for (const auto& ideal : ideals) {
    ++report.instances_checked;
    if (is_log_canonical(ideal, Rational(1))) continue;
    ++non_lc;
    if (auto finding = fail_colength(ideal, simplex_points)) {
      report.failures.push_back({describe(ideal), Rational(1), finding->check, finding->reason});
      continue;
    }
    const auto length = colength(ideal).value();
    if (!smallest || length < *smallest) smallest = length, smallest_ideal = describe(ideal);
  }
  report.statistics["non_lc_instances"] = std::to_string(non_lc);
  report.statistics["simplex_points_checked"] = std::to_string(simplex_points);
  if (smallest) {
    report.statistics["min_non_lc_colength"] = std::to_string(*smallest);
    report.statistics["min_non_lc_ideal"] = smallest_ideal;
  }
  report.runtime_note = std::to_string(report.instances_checked) + " ideals, " + std::to_string(non_lc) +
                        " not log canonical at c = 1, " + std::to_string(simplex_points) +
                        " simplex points tested against the Newton polyhedron";
  return report;
}

VerificationReport verify_colength_theorem(std::size_t n, std::uint32_t box) {
  guard(n, box + 1);
  const auto universe = zero_dimensional_universe(n, box);
  auto report = verify_colength_instances(universe);
  report.universe = {n, box,
                     "zero-dimensional monomial ideals with staircase inside [0," + std::to_string(box) + "]^" +
                         std::to_string(n)};
  return report;
}

VerificationReport verify_multiplier_instances(std::span<const MonomialIdeal> ideals, std::span<const Rational> grid) {
  VerificationReport report;
  report.suite = "multiplier";
  std::uint64_t pairs = 0, trivial = 0, properness = 0;
  for (const auto& ideal : ideals) {
    ++report.instances_checked;
    const auto threshold = lct(ideal);
    for (const auto& c : grid) {
      ++pairs;
      if (c.sign() <= 0) throw DomainError("grid values must be positive");
      const auto inner = multiplier_ideal_plus(ideal, c);
      const bool lc = Extended<Rational>(c) <= threshold;
      if (inner.is_unit()) ++trivial;
      if (inner.is_unit() != lc)
        report.failures.push_back({describe(ideal), c, "threshold-triviality",
                                   std::string(inner.is_unit() ? "J+ trivial" : "J+ proper") + " but lct = " +
                                       threshold.str()});
      if (Extended<Rational>(c / 2) > threshold) {
        ++properness;
        if (multiplier_ideal_plus(inner, Rational(1)).is_unit())
          report.failures.push_back({describe(ideal), c, "properness",
                                     "J+(J+(I^c)) is trivial although c/2 > lct = " + threshold.str()});
      }
    }
  }
  report.statistics["pairs_checked"] = std::to_string(pairs);
  report.statistics["trivial_pairs"] = std::to_string(trivial);
  report.statistics["properness_cases"] = std::to_string(properness);
  report.runtime_note = std::to_string(report.instances_checked) + " ideals x " + std::to_string(grid.size()) +
                        " coefficients, " + std::to_string(properness) + " with c/2 above the threshold";
  return report;
}

VerificationReport verify_multiplier_lemmas(std::size_t n, std::uint32_t box, std::span<const Rational> grid) {
  guard(n, box + 1);
  const auto universe = antichain_universe(n, box);
  auto report = verify_multiplier_instances(universe, grid);
  report.universe = {n, box, "monomial ideals with minimal generators in [0," + std::to_string(box) + "]^" +
                                 std::to_string(n)};
  return report;
}

}  // namespace lctkit
