#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "lctkit/core/error.hpp"
#include "lctkit/core/parser.hpp"
#include "lctkit/newton/multiplier_ideal.hpp"
#include "lctkit/newton/newton_polyhedron.hpp"
#include "lctkit/newton/threshold.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lctkit;
using lctkit::testing::Engine;

namespace {

const VariableList xy = VariableList::parse("x,y");

MonomialIdeal ideal2(const char* text) { return parse_monomial_ideal(text, xy); }

MonomialIdeal pure_powers(const std::vector<std::uint32_t>& m) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < m.size(); ++i) {
    ExponentVector e(m.size());
    e[i] = m[i];
    gens.push_back(e);
  }
  return MonomialIdeal::minimalize(gens);
}

RationalVector diagonal(std::size_t n, const Rational& t) { return RationalVector(n, t); }

const char* stepped_polygon = "y^7, y^5*x, y^3*x^2, y*x^4, x^6";

}  // namespace

TEST_CASE("newton_polyhedron keeps the generators as vertex candidates") {
  CHECK(newton_polyhedron(ideal2("x^2, y^3")).vertex_candidates().size() == 2);
  CHECK(newton_polyhedron(ideal2(stepped_polygon)).vertex_candidates().size() == 5);
  CHECK(newton_polyhedron(MonomialIdeal::unit(2)).is_orthant());
  CHECK(newton_polyhedron(MonomialIdeal::unit(2)).contains(ExponentVector{0, 0}));
}

TEST_CASE("contains") {
  CHECK(newton_polyhedron(ideal2("x^2, x*y, y^3")).contains(ExponentVector{1, 1}));
  // 3*1 + 2*1 = 5 < 6 on the facet 3x + 2y >= 6.
  CHECK_FALSE(newton_polyhedron(ideal2("x^2, y^3")).contains(ExponentVector{1, 1}));
  const auto p = newton_polyhedron(ideal2(stepped_polygon));
  for (const auto& g : p.vertex_candidates()) CHECK(p.contains(g));
  CHECK_THROWS_AS(p.contains(ExponentVector{1, 1, 1}), DimensionMismatch);
}

TEST_CASE("membership agrees with basis enumeration and is upward closed") {
  Engine rng(99);
  for (int round = 0; round < 250; ++round) {
    const std::size_t n = lctkit::testing::uniform(rng, 1, 3);
    const MonomialIdeal ideal = lctkit::testing::random_monomial_ideal(rng, n, 5, 4);
    const NewtonPolyhedron p(ideal);
    RationalVector q(n);
    for (auto& v : q) v = Rational(static_cast<long>(lctkit::testing::uniform(rng, 0, 24)), 4);
    const bool inside = p.contains(q);
    CHECK(inside == lctkit::testing::newton_contains_by_basis_enumeration(ideal, q));
    for (const auto& g : ideal.generators()) CHECK(p.contains(g));
    if (inside) {
      RationalVector up = q;
      for (auto& v : up) v += lctkit::testing::random_positive_rational(rng) - Rational(1, 10);
      for (std::size_t j = 0; j < n; ++j) up[j] = std::max(up[j], q[j]);
      CHECK(p.contains(up));
    }
  }
}

TEST_CASE("diagonal_crossing") {
  SUBCASE("(x^2, y^3) crosses on the facet 3x + 2y = 6") {
    const auto d = diagonal_crossing(newton_polyhedron(ideal2("x^2, y^3"))).value();
    CHECK(d.xi == Rational(6, 5));
    CHECK(d.integer_normal == std::vector<BigInt>{3, 2});
    CHECK(d.dual_normal == RationalVector{Rational(3, 5), Rational(2, 5)});
  }
  SUBCASE("stepped polygon crosses the central face x + y = 5") {
    const auto d = diagonal_crossing(newton_polyhedron(ideal2(stepped_polygon))).value();
    CHECK(d.xi == Rational(5, 2));
    CHECK(d.integer_normal == std::vector<BigInt>{1, 1});
    CHECK(d.canonical_normal == RationalVector{1, 1});
  }
  SUBCASE("half-line in one variable") {
    for (std::uint32_t m = 1; m <= 6; ++m)
      CHECK(diagonal_crossing(newton_polyhedron(pure_powers({m})))->xi == Rational(m));
  }
  SUBCASE("unit ideal is a distinct outcome") {
    CHECK_FALSE(diagonal_crossing(newton_polyhedron(MonomialIdeal::unit(3))).has_value());
  }
  SUBCASE("vertex on the diagonal picks the lexicographically smallest normal") {
    // (x^2 y^2, x^5, y^5): the diagonal meets the vertex (2,2); normals range
    // over a cone and the canonical one minimizes a_1 first.
    const auto p = newton_polyhedron(ideal2("x^2*y^2, x^5, y^5"));
    const auto d = diagonal_crossing(p).value();
    CHECK(d.xi == 2);
    CHECK(is_supporting_normal(p, d.xi, d.canonical_normal));
    CHECK(is_supporting_normal(p, d.xi, d.dual_normal));
    // 5*a_1 >= 4 and 5*a_2 >= 4 with a_1 + a_2 = 2.
    CHECK(d.canonical_normal == RationalVector{Rational(4, 5), Rational(6, 5)});
  }
}

TEST_CASE("diagonal crossing matches vertex enumeration; certificates hold") {
  Engine rng(5);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = lctkit::testing::uniform(rng, 1, 3);
    const MonomialIdeal ideal = lctkit::testing::random_monomial_ideal(rng, n, 6, 4);
    if (ideal.is_unit()) continue;
    const NewtonPolyhedron p(ideal);
    const auto d = diagonal_crossing(p).value();
    CHECK(d.xi == lctkit::testing::diagonal_crossing_by_vertex_enumeration(ideal));
    CHECK(p.contains(diagonal(n, d.xi)));
    for (int k = 2; k <= 10; ++k) CHECK_FALSE(p.contains(diagonal(n, d.xi * Rational(k - 1, k))));
    CHECK(is_supporting_normal(p, d.xi, d.dual_normal));
    CHECK(is_supporting_normal(p, d.xi, d.canonical_normal));
    CHECK(std::accumulate(d.canonical_normal.begin(), d.canonical_normal.end(), Rational()) == Rational(n));
    // Lexicographically no larger than the dual normal rescaled to sum n.
    RationalVector scaled = d.dual_normal;
    for (auto& a : scaled) a *= Rational(n);
    CHECK_FALSE(std::lexicographical_compare(scaled.begin(), scaled.end(), d.canonical_normal.begin(),
                                             d.canonical_normal.end()));
  }
}

TEST_CASE("lct examples") {
  SUBCASE("pure powers give sum of reciprocals") {
    CHECK(lct(pure_powers({2, 3})) == Extended<Rational>(Rational(5, 6)));
    CHECK(lct(pure_powers({2, 3, 7})) == Extended<Rational>(Rational(1, 2) + Rational(1, 3) + Rational(1, 7)));
  }
  SUBCASE("(x^{2m+1}, y^{2m+1}) at m = 2") {
    const auto t = lct(pure_powers({5, 5}));
    CHECK(t == Extended<Rational>(Rational(2, 5)));
    CHECK(t < Extended<Rational>(Rational(1, 2)));
  }
  SUBCASE("(x^{m+1}, y^{(m+1)^2}) at m = 3") {
    const auto t = lct(pure_powers({4, 16}));
    CHECK(t == Extended<Rational>(Rational(5, 16)));
    CHECK(t < Extended<Rational>(Rational(1, 3)));
  }
  SUBCASE("unit ideal") { CHECK(lct(MonomialIdeal::unit(2)).is_infinite()); }
}

TEST_CASE("is_log_canonical is closed at the threshold") {
  CHECK(is_log_canonical(ideal2("x^2, y^3"), Rational(5, 6)));
  CHECK_FALSE(is_log_canonical(ideal2("x^2, y^3"), 1));
  CHECK(is_log_canonical(MonomialIdeal::unit(2), 1000));
  CHECK(is_log_canonical(ideal2("x^2, x*y, y^3"), 1));
}

TEST_CASE("threshold properties") {
  Engine rng(17);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = lctkit::testing::uniform(rng, 1, 3);
    const MonomialIdeal ideal = lctkit::testing::random_monomial_ideal(rng, n, 4, 3);
    const auto t = lct(ideal);
    if (t.is_infinite()) continue;

    // Scaling law against the r-th power.
    for (unsigned r = 2; r <= 3; ++r) {
      const MonomialIdeal pow = ideal.power(r);
      CHECK(lct(pow).value() == t.value() / Rational(r));
      for (const Rational& c : {t.value(), t.value() * Rational(11, 10), t.value() * Rational(9, 10)})
        CHECK(is_log_canonical(ideal, c) == is_log_canonical(pow, c / Rational(r)));
    }

    // Monotonicity: adding generators can only raise the threshold.
    std::vector<ExponentVector> bigger = ideal.generators();
    bigger.push_back(lctkit::testing::random_exponent(rng, n, 4));
    const MonomialIdeal larger = MonomialIdeal::minimalize(bigger);
    REQUIRE(ideal.is_contained_in(larger));
    CHECK(t <= lct(larger));

    // Permutation equivariance.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(lct(ideal.permuted(perm)) == t);
  }
}

TEST_CASE("multiplier_ideal_plus examples") {
  CHECK(multiplier_ideal_plus(ideal2("x^2, y^3"), 1) == ideal2("x, y"));
  CHECK(multiplier_ideal_plus(ideal2("x^2, y^3"), Rational(5, 6)).is_unit());
  CHECK(multiplier_ideal_plus(ideal2(stepped_polygon), Rational(2, 5)).is_unit());
  CHECK_FALSE(multiplier_ideal_plus(ideal2(stepped_polygon), Rational(1, 2)).is_unit());
  // J+((x^2,y^3)^2) = (x^3, x^2 y, x y^2, y^4) from 3a + 2b >= 7.
  CHECK(multiplier_ideal_plus(ideal2("x^2, y^3"), 2) == ideal2("x^3, x^2*y, x*y^2, y^4"));
}

TEST_CASE("J+ is trivial exactly up to the threshold; strict variant cross-checks") {
  Engine rng(23);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = lctkit::testing::uniform(rng, 1, 3);
    const MonomialIdeal ideal = lctkit::testing::random_monomial_ideal(rng, n, 4, 3);
    const Rational c(static_cast<long>(lctkit::testing::uniform(rng, 1, 30)), 12);
    const MonomialIdeal plus = multiplier_ideal_plus(ideal, c);
    CHECK(plus.is_unit() == is_log_canonical(ideal, c));
    // Brute-force membership on a box against the defining rule.
    const NewtonPolyhedron p(ideal);
    for (int probe = 0; probe < 10; ++probe) {
      const ExponentVector v = lctkit::testing::random_exponent(rng, n, 6);
      RationalVector shifted(v.begin(), v.end());
      for (auto& s : shifted) s += 1;
      CHECK(plus.contains(v) == lctkit::testing::newton_contains_by_basis_enumeration(
                                    ideal, [&] {
                                      RationalVector q = shifted;
                                      for (auto& s : q) s /= c;
                                      return q;
                                    }()));
    }
    const MonomialIdeal strict = multiplier_ideal(ideal, c);
    CHECK(strict.is_contained_in(plus));
    // No jumping number of these small ideals lies in (c - 1/100000, c).
    CHECK(multiplier_ideal(ideal, c - Rational(1, 100000)) == plus);
  }
}
