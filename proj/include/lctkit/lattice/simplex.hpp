#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lctkit/core/exponent_vector.hpp"
#include "lctkit/core/rational.hpp"

namespace lctkit {

/// The simplex {r in N^n : sum a_i r_i <= sum a_i} for a strictly positive normal a.
class SimplexSpec {
 public:
  explicit SimplexSpec(std::vector<Rational> normal);

  std::size_t dimension() const { return normal_.size(); }
  const std::vector<Rational>& normal() const { return normal_; }
  /// a scaled by the lcm of its denominators.
  const std::vector<BigInt>& integer_normal() const { return scaled_; }

  bool contains(const ExponentVector& r) const;

 private:
  std::vector<Rational> normal_;
  std::vector<BigInt> scaled_;
  BigInt budget_;
};

std::uint64_t simplex_count(const SimplexSpec& s);

/// Visits the lattice points in lexicographic order.
void for_each_simplex_point(const SimplexSpec& s, const std::function<void(const ExponentVector&)>& visit);

}  // namespace lctkit
