#include "lctkit/newton/threshold.hpp"

#include "lctkit/newton/newton_polyhedron.hpp"

namespace lctkit {

Extended<Rational> lct(const MonomialIdeal& ideal) {
  const auto xi = diagonal_value(NewtonPolyhedron(ideal));
  if (!xi) return Extended<Rational>::infinity();
  return xi->reciprocal();
}

bool is_log_canonical(const MonomialIdeal& ideal, const Rational& c) {
  if (c.sign() <= 0) return true;
  // c <= lct iff (1/c, ..., 1/c) lies in the Newton polyhedron.
  const NewtonPolyhedron poly(ideal);
  if (poly.is_orthant()) return true;
  return poly.contains(RationalVector(ideal.dimension(), c.reciprocal()));
}

}  // namespace lctkit
