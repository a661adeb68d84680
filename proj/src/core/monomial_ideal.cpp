#include "lctkit/core/monomial_ideal.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"

namespace lctkit {

MonomialIdeal MonomialIdeal::minimalize(std::span<const ExponentVector> raw) {
  if (raw.empty()) throw DomainError("a monomial ideal needs at least one generator");
  const std::size_t n = raw.front().size();
  for (const auto& e : raw) require_same_dimension(n, e.size());

  // Sorting by degree first means a vector can only be divided by one already
  // kept.
  std::vector<ExponentVector> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  std::vector<ExponentVector> kept;
  for (const auto& e : sorted) {
    const bool divisible =
        std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& g) { return g.divides(e); });
    if (!divisible) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(n, std::move(kept));
}

MonomialIdeal MonomialIdeal::minimalize(std::initializer_list<ExponentVector> raw) {
  return minimalize(std::span<const ExponentVector>(raw.begin(), raw.size()));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dimension) {
  return MonomialIdeal(dimension, {ExponentVector(dimension)});
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_zero();
}

bool MonomialIdeal::contains(const ExponentVector& e) const {
  require_same_dimension(dimension_, e.size());
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return g.divides(e); });
}

bool MonomialIdeal::is_contained_in(const MonomialIdeal& other) const {
  require_same_dimension(dimension_, other.dimension_);
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return other.contains(g); });
}

std::optional<std::vector<ExponentVector::value_type>> MonomialIdeal::pure_powers() const {
  std::vector<ExponentVector::value_type> powers(dimension_, 0);
  std::vector<bool> found(dimension_, false);
  for (const auto& g : generators_) {
    if (g.is_zero()) return std::vector<ExponentVector::value_type>(dimension_, 0);
    std::size_t support = 0, index = 0;
    for (std::size_t i = 0; i < dimension_; ++i)
      if (g[i] != 0) {
        ++support;
        index = i;
      }
    if (support == 1) {
      found[index] = true;
      powers[index] = g[index];
    }
  }
  if (std::find(found.begin(), found.end(), false) != found.end()) return std::nullopt;
  return powers;
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  require_same_dimension(dimension_, other.dimension_);
  std::vector<ExponentVector> raw;
  raw.reserve(generators_.size() * other.generators_.size());
  for (const auto& a : generators_)
    for (const auto& b : other.generators_) raw.push_back(a + b);
  return minimalize(raw);
}

MonomialIdeal MonomialIdeal::power(unsigned r) const {
  MonomialIdeal result = unit(dimension_);
  for (unsigned i = 0; i < r; ++i) result = result.product(*this);
  return result;
}

MonomialIdeal MonomialIdeal::permuted(std::span<const std::size_t> perm) const {
  require_same_dimension(dimension_, perm.size());
  std::vector<ExponentVector> raw;
  for (const auto& g : generators_) {
    ExponentVector e(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) e[perm[i]] = g[i];
    raw.push_back(e);
  }
  return minimalize(raw);
}

}  // namespace lctkit
