#pragma once

#include <string>
#include <vector>

#include "lctkit/core/rational.hpp"

namespace lctkit {

/// 3^n / 2: r or (2,...,2) - r lies in the simplex for every r in {0,1,2}^n.
Rational bound_pairing(unsigned n);
/// (3^n + 1) / 2, counting the self-paired centre (1,...,1) once.
Rational bound_pairing_attained(unsigned n);
/// C(2n, n) / n: some cyclic shift of each r with sum r_i <= n lies in the simplex.
Rational bound_cyclic(unsigned n);
/// C(2n, n) / n + (n-1)/(2n) * 3^n.
Rational bound_combined(unsigned n);

struct CrossoverRow {
  unsigned n;
  Rational pairing;
  Rational cyclic;
  Rational combined;
  /// "pairing" or "cyclic", whichever bound is larger ("tie" if equal).
  std::string larger;
  /// Pairing for n <= 5 and cyclic from n = 6 on, as the crossover is usually quoted.
  std::string quoted;
  bool agrees;
};

std::vector<CrossoverRow> crossover_table(unsigned max_n);

/// Smallest n >= 2 at which the cyclic bound exceeds the pairing bound. (At
/// n = 1 the cyclic bound 2 already beats 3/2.)
unsigned computed_crossover();

}  // namespace lctkit
