#include <algorithm>
#include <set>

#include "doctest.h"
#include "lctkit/core/error.hpp"
#include "lctkit/lattice/bounds.hpp"
#include "lctkit/lattice/simplex.hpp"
#include "support/generators.hpp"

using namespace lctkit;
using lctkit::testing::Engine;

namespace {

std::vector<Rational> ints(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<Rational> random_normal(Engine& rng, std::size_t n) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(lctkit::testing::random_positive_rational(rng, 6));
  return a;
}

/// Counts the box [0, floor(sum a / a_i)] point by point in rational arithmetic.
std::uint64_t count_by_box(const std::vector<Rational>& a) {
  Rational total;
  for (const auto& v : a) total += v;
  std::vector<std::uint32_t> bound;
  for (const auto& v : a) bound.push_back(static_cast<std::uint32_t>((total / v).floor().get_ui()));
  std::uint64_t count = 0;
  ExponentVector r(a.size());
  while (true) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(r[i]);
    if (s <= total) ++count;
    std::size_t i = 0;
    while (i < a.size() && r[i] == bound[i]) r[i++] = 0;
    if (i == a.size()) break;
    ++r[i];
  }
  return count;
}

Rational ceil_of(const Rational& q) { return Rational(q.ceil()); }

}  // namespace

TEST_CASE("simplex_count examples") {
  CHECK(simplex_count(SimplexSpec(ints({1, 1}))) == 6);
  CHECK(simplex_count(SimplexSpec(ints({3, 2}))) == 5);
  CHECK(simplex_count(SimplexSpec(ints({1, 1, 1}))) == 20);
  CHECK(simplex_count(SimplexSpec(ints({7}))) == 2);
  CHECK(simplex_count(SimplexSpec({Rational(1, 3), Rational(1, 2)})) == 5);

  std::vector<ExponentVector> points;
  for_each_simplex_point(SimplexSpec(ints({3, 2})), [&](const ExponentVector& r) { points.push_back(r); });
  CHECK(points == std::vector<ExponentVector>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}});

  CHECK_THROWS_AS(SimplexSpec(ints({1, 0})), DomainError);
  CHECK_THROWS_AS(SimplexSpec({Rational(-1, 2), Rational(1)}), DomainError);
  CHECK_THROWS_AS(SimplexSpec(std::vector<Rational>{}), DomainError);
}

TEST_CASE("bound examples") {
  CHECK(bound_pairing(3) == Rational(27, 2));
  CHECK(bound_pairing(1) == Rational(3, 2));
  CHECK(bound_pairing(2) == Rational(9, 2));
  CHECK(bound_pairing_attained(2) == 5);
  CHECK(bound_cyclic(2) == 3);
  CHECK(bound_cyclic(6) == 154);
  CHECK(bound_cyclic(1) == 2);
  CHECK(bound_combined(2) == Rational(21, 4));
  CHECK(bound_combined(1) == 2);
  CHECK(bound_combined(5) == Rational(738, 5));
  CHECK_THROWS_AS(bound_pairing(0), DomainError);
}

TEST_CASE("crossover table reports computed values") {
  const auto rows = crossover_table(14);
  REQUIRE(rows.size() == 14);
  CHECK(rows[4].pairing == Rational(243, 2));
  CHECK(rows[4].cyclic == Rational(252, 5));
  CHECK(rows[4].larger == "pairing");
  CHECK(rows[1].larger == "pairing");
  CHECK(rows[5].larger == "pairing");
  CHECK_FALSE(rows[5].agrees);
  CHECK(rows[9].pairing == Rational(59049, 2));
  CHECK(rows[9].cyclic == Rational(184756, 10));
  CHECK(computed_crossover() == 13);
  for (const auto& row : rows) {
    if (row.n >= 2) CHECK((row.larger == "cyclic") == (row.n >= 13));
    CHECK(row.agrees == (row.larger == row.quoted));
  }
}

TEST_CASE("simplex_count agrees with box enumeration") {
  Engine rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_normal(rng, 1 + trial % 4);
    CHECK(simplex_count(SimplexSpec(a)) == count_by_box(a));
  }
}

TEST_CASE("lower bounds hold for random normals") {
  Engine rng(32);
  for (unsigned n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      const SimplexSpec s(random_normal(rng, n));
      const Rational count(simplex_count(s));
      CHECK(count >= bound_pairing_attained(n));
      CHECK(count >= ceil_of(bound_cyclic(n)));
    }
}

TEST_CASE("pairing and cyclic arguments hold pointwise") {
  Engine rng(33);
  for (unsigned n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const SimplexSpec s(random_normal(rng, n));
      ExponentVector r(n);
      while (true) {
        ExponentVector mirror(n);
        for (std::size_t i = 0; i < n; ++i) mirror[i] = 2 - r[i];
        CHECK((s.contains(r) || s.contains(mirror)));
        std::size_t i = 0;
        while (i < n && r[i] == 2) r[i++] = 0;
        if (i == n) break;
        ++r[i];
      }

      std::vector<ExponentVector> small;
      ExponentVector t(n);
      while (true) {
        if (t.degree() <= n) small.push_back(t);
        std::size_t i = 0;
        while (i < n && t[i] == n) t[i++] = 0;
        if (i == n) break;
        ++t[i];
      }
      std::set<ExponentVector> hit;
      for (const auto& v : small) {
        bool some = false;
        ExponentVector shifted = v;
        for (std::size_t k = 0; k < n; ++k) {
          if (s.contains(shifted)) some = true, hit.insert(shifted);
          ExponentVector next(n);
          for (std::size_t j = 0; j < n; ++j) next[(j + 1) % n] = shifted[j];
          shifted = next;
        }
        CHECK(some);
      }
      CHECK(Rational(hit.size()) >= bound_cyclic(n));
    }
}

TEST_CASE("simplex_count is invariant under scaling and permutation") {
  Engine rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_normal(rng, n);
    const auto count = simplex_count(SimplexSpec(a));
    const auto lambda = lctkit::testing::random_positive_rational(rng);
    std::vector<Rational> scaled;
    for (const auto& v : a) scaled.push_back(v * lambda);
    CHECK(simplex_count(SimplexSpec(scaled)) == count);
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(simplex_count(SimplexSpec(a)) == count);
  }
}
