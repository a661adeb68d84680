#include "lctkit/newton/multiplier_ideal.hpp"

#include <algorithm>
#include <functional>

#include "lctkit/core/error.hpp"
#include "lctkit/newton/newton_polyhedron.hpp"

namespace lctkit {

namespace {

using Membership = std::function<bool(const RationalVector&)>;

// Membership is monotone in v, so the minimal members all lie in the box
// [0, max_g ceil(c g_i)]. Points above a known member are members without an
// LP call.
MonomialIdeal minimal_members(const MonomialIdeal& ideal, const Rational& c,
                              const Membership& is_member) {
  if (c.sign() <= 0) throw DomainError("coefficient must be positive, got " + c.str());
  const std::size_t n = ideal.dimension();
  std::vector<std::size_t> extent(n, 1);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt bound = (c * Rational(g[i])).ceil();
      extent[i] = std::max<std::size_t>(extent[i], bound.get_ui() + 1);
    }
  std::size_t total = 1;
  for (auto e : extent) total *= e;

  std::vector<char> in(total, 0);
  std::vector<ExponentVector> found;
  ExponentVector v(n);
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<ExponentVector::value_type>(rest % extent[i]);
      rest /= extent[i];
    }
    bool member = false;
    bool minimal = true;
    std::size_t stride = 1;
    for (std::size_t i = n; i-- > 0;) {
      if (v[i] > 0 && in[index - stride]) {
        member = true;
        minimal = false;
        break;
      }
      stride *= extent[i];
    }
    if (!member) {
      RationalVector shifted(n);
      for (std::size_t i = 0; i < n; ++i) shifted[i] = Rational(v[i] + 1);
      member = is_member(shifted);
    }
    if (member) {
      in[index] = 1;
      if (minimal) found.push_back(v);
    }
  }
  return MonomialIdeal::minimalize(found);
}

}  // namespace

MonomialIdeal multiplier_ideal_plus(const MonomialIdeal& ideal, const Rational& c) {
  const NewtonPolyhedron poly(ideal);
  return minimal_members(ideal, c, [&](const RationalVector& q) { return poly.contains_scaled(q, c); });
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const Rational& c) {
  const NewtonPolyhedron poly(ideal);
  return minimal_members(ideal, c,
                         [&](const RationalVector& q) { return poly.interior_contains_scaled(q, c); });
}

}  // namespace lctkit
