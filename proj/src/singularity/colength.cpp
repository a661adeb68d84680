#include "lctkit/singularity/colength.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

Extended<std::uint64_t> colength(const MonomialIdeal& ideal) {
  const auto powers = ideal.pure_powers();
  if (!powers) return Extended<std::uint64_t>::infinity();
  const std::size_t n = ideal.dimension();

  std::uint64_t box = 1;
  for (auto p : *powers) {
    if (p != 0 && box > (std::uint64_t{1} << 40) / p) throw LimitExceeded("staircase box too large");
    box *= p;
  }
  if (box == 0) return std::uint64_t{0};  // unit ideal

  // Walk the box [0, p_1) x ... x [0, p_n) like an odometer.
  std::uint64_t count = 0;
  ExponentVector e(n);
  for (std::uint64_t step = 0; step < box; ++step) {
    if (!ideal.contains(e)) ++count;
    for (std::size_t i = n; i-- > 0;) {
      if (++e[i] < (*powers)[i]) break;
      e[i] = 0;
    }
  }
  return count;
}

}  // namespace lctkit
