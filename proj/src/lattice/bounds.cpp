#include "lctkit/lattice/bounds.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

namespace {

void require_positive(unsigned n) {
  if (n == 0) throw DomainError("bounds need n >= 1");
}

}  // namespace

Rational bound_pairing(unsigned n) {
  require_positive(n);
  return Rational(power(3, n), BigInt(2));
}

Rational bound_pairing_attained(unsigned n) {
  require_positive(n);
  return Rational(power(3, n) + 1, BigInt(2));
}

Rational bound_cyclic(unsigned n) {
  require_positive(n);
  return Rational(binomial(2 * n, n), BigInt(n));
}

Rational bound_combined(unsigned n) {
  require_positive(n);
  return bound_cyclic(n) + Rational(BigInt(n - 1), BigInt(2 * n)) * Rational(power(3, n));
}

std::vector<CrossoverRow> crossover_table(unsigned max_n) {
  require_positive(max_n);
  std::vector<CrossoverRow> rows;
  for (unsigned n = 1; n <= max_n; ++n) {
    CrossoverRow row{n, bound_pairing(n), bound_cyclic(n), bound_combined(n), {}, {}, false};
    row.larger = row.pairing > row.cyclic ? "pairing" : row.pairing < row.cyclic ? "cyclic" : "tie";
    row.quoted = n <= 5 ? "pairing" : "cyclic";
    row.agrees = row.larger == row.quoted;
    rows.push_back(std::move(row));
  }
  return rows;
}

unsigned computed_crossover() {
  for (unsigned n = 2;; ++n)
    if (bound_cyclic(n) > bound_pairing(n)) return n;
}

}  // namespace lctkit
