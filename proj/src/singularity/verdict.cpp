#include "lctkit/singularity/verdict.hpp"

#include "lctkit/newton/newton_polyhedron.hpp"
#include "lctkit/newton/threshold.hpp"
#include "lctkit/singularity/formulas.hpp"

namespace lctkit {

const char* to_string(Singularity s) {
  return s == Singularity::LogCanonical ? "log-canonical" : "not-log-canonical";
}

ThresholdVerdict make_verdict(const Rational& c, const Extended<Rational>& threshold,
                              std::optional<std::string> witness) {
  const Singularity s = Extended<Rational>(c) <= threshold ? Singularity::LogCanonical
                                                           : Singularity::NotLogCanonical;
  return ThresholdVerdict{c, threshold, s, std::move(witness)};
}

ThresholdVerdict monomial_verdict(const MonomialIdeal& ideal, const Rational& c) {
  const auto crossing = diagonal_crossing(NewtonPolyhedron(ideal));
  if (!crossing) return make_verdict(c, Extended<Rational>::infinity());
  std::string normal = "normal (";
  for (std::size_t i = 0; i < crossing->integer_normal.size(); ++i)
    normal += (i ? "," : "") + crossing->integer_normal[i].get_str();
  normal += ")";
  return make_verdict(c, crossing->xi.reciprocal(), std::move(normal));
}

ThresholdVerdict pure_power_verdict(std::span<const std::uint32_t> exponents, const Rational& c) {
  std::string weights = "weights (";
  for (std::size_t i = 0; i < exponents.size(); ++i)
    weights += (i ? "," : "") + Rational(1L, static_cast<long>(exponents[i])).str();
  weights += ")";
  return make_verdict(c, weighted_lct(exponents), std::move(weights));
}

}  // namespace lctkit
