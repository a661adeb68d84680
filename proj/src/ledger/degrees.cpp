#include "lctkit/ledger/degrees.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

BigInt bezout_degree(std::uint64_t d, std::span<const std::uint64_t> multiples) {
  if (d == 0) throw DomainError("hypersurface degree must be at least 1");
  BigInt degree(static_cast<unsigned long>(d));
  for (auto m : multiples) degree *= static_cast<unsigned long>(m);
  return degree;
}

Rational intersection_number(std::uint64_t deg_z, std::uint64_t deg_w, std::uint64_t deg_x) {
  if (deg_x == 0) throw DomainError("deg X must be at least 1");
  return Rational(BigInt(static_cast<unsigned long>(deg_z)) * static_cast<unsigned long>(deg_w),
                  BigInt(static_cast<unsigned long>(deg_x)));
}

Rational mult_bound(std::uint64_t deg_w, std::uint64_t deg_x) {
  if (deg_x == 0) throw DomainError("deg X must be at least 1");
  return Rational(BigInt(static_cast<unsigned long>(deg_w)), BigInt(static_cast<unsigned long>(deg_x)));
}

BigInt residual_degree(std::uint64_t d, std::uint64_t deg_z, std::uint64_t steps) {
  if (d <= 1) throw DomainError("residual degree needs d >= 2");
  return power(d - 1, steps) * static_cast<unsigned long>(deg_z);
}

}  // namespace lctkit
