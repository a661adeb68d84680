#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lctkit/core/extended.hpp"
#include "lctkit/core/monomial_ideal.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

using RationalVector = std::vector<Rational>;

/// Convex hull of the generator exponents plus the closed positive orthant.
/// Facets are never enumerated; every question is answered by an exact LP.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t dimension() const { return dimension_; }
  const std::vector<ExponentVector>& vertex_candidates() const { return vertices_; }
  bool is_orthant() const;

  /// q in P: some convex combination of the vertex candidates is <= q.
  bool contains(std::span<const Rational> q) const;
  bool contains(const ExponentVector& q) const;
  /// q in scale * P (scale > 0).
  bool contains_scaled(std::span<const Rational> q, const Rational& scale) const;
  /// q in the interior of scale * P.
  bool interior_contains_scaled(std::span<const Rational> q, const Rational& scale) const;

 private:
  std::size_t dimension_;
  std::vector<ExponentVector> vertices_;
};

/// Where the diagonal t*(1,...,1) enters the polyhedron, with a supporting
/// hyperplane there (the central face).
struct DiagonalCrossing {
  Rational xi;
  /// Normal read off the optimal simplex dual, normalized to sum 1.
  RationalVector dual_normal;
  /// Lexicographically smallest supporting normal with sum equal to n.
  RationalVector canonical_normal;
  /// canonical_normal scaled to coprime integers.
  std::vector<BigInt> integer_normal;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Just the crossing value xi; nullopt for the unit ideal.
std::optional<Rational> diagonal_value(const NewtonPolyhedron& poly);

/// nullopt for the unit ideal, whose polyhedron contains the origin.
std::optional<DiagonalCrossing> diagonal_crossing(const NewtonPolyhedron& p);

/// Every normal a >= 0 with sum a = n and a.g >= xi*n on all vertex
/// candidates g supports the polyhedron at xi*(1,...,1).
bool is_supporting_normal(const NewtonPolyhedron& p, const Rational& xi,
                          std::span<const Rational> normal);

/// Scales a nonnegative rational vector to coprime integers.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

}  // namespace lctkit
