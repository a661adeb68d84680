#include "doctest.h"
#include "lctkit/newton/simplex_lp.hpp"
#include "support/generators.hpp"

using namespace lctkit;
using namespace lctkit::lp;
using lctkit::testing::Engine;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Optimality certificate: primal feasible, dual feasible with the documented
// signs, equal objectives. Weak duality then proves optimality.
void check_certificate(const Problem& p, const Solution& s) {
  REQUIRE(s.status == Status::Optimal);
  for (const auto& x : s.primal) CHECK(x.sign() >= 0);
  CHECK(dot(p.objective, s.primal) == s.value);
  Rational dual_value;
  std::vector<Rational> reduced = p.objective;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    const Rational lhs = dot(c.coefficients, s.primal);
    switch (c.relation) {
      case Relation::LessEqual:
        CHECK(lhs <= c.rhs);
        CHECK(s.dual[i].sign() <= 0);
        break;
      case Relation::GreaterEqual:
        CHECK(lhs >= c.rhs);
        CHECK(s.dual[i].sign() >= 0);
        break;
      case Relation::Equal:
        CHECK(lhs == c.rhs);
        break;
    }
    dual_value += s.dual[i] * c.rhs;
    for (std::size_t j = 0; j < reduced.size(); ++j) reduced[j] -= s.dual[i] * c.coefficients[j];
  }
  for (const auto& r : reduced) CHECK(r.sign() >= 0);
  CHECK(dual_value == s.value);
}

}  // namespace

TEST_CASE("small LP with known optimum") {
  // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6
  Problem p;
  p.variable_count = 2;
  p.objective = {-1, -1};
  p.add({1, 2}, Relation::LessEqual, 4);
  p.add({3, 1}, Relation::LessEqual, 6);
  const Solution s = solve(p);
  CHECK(s.value == Rational(-14, 5));
  CHECK(s.primal == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});
  check_certificate(p, s);
}

TEST_CASE("infeasible and unbounded problems") {
  Problem infeasible;
  infeasible.variable_count = 1;
  infeasible.objective = {1};
  infeasible.add({1}, Relation::GreaterEqual, 3);
  infeasible.add({1}, Relation::LessEqual, 2);
  CHECK(solve(infeasible).status == Status::Infeasible);
  CHECK_FALSE(feasible(infeasible));

  Problem unbounded;
  unbounded.variable_count = 2;
  unbounded.objective = {-1, 0};
  unbounded.add({1, -1}, Relation::LessEqual, 1);
  CHECK(solve(unbounded).status == Status::Unbounded);
}

TEST_CASE("negative right-hand sides and redundant equalities") {
  Problem p;
  p.variable_count = 3;
  p.objective = {1, 2, 3};
  p.add({-1, -1, -1}, Relation::LessEqual, -2);  // x+y+z >= 2
  p.add({1, 1, 1}, Relation::Equal, 2);
  p.add({2, 2, 2}, Relation::Equal, 4);  // redundant
  p.add({0, 1, 0}, Relation::GreaterEqual, Rational(1, 2));
  const Solution s = solve(p);
  CHECK(s.value == Rational(5, 2));
  check_certificate(p, s);
}

TEST_CASE("degenerate problem terminates under Bland's rule") {
  // Beale's classic cycling example.
  Problem p;
  p.variable_count = 4;
  p.objective = {Rational(-3, 4), 150, Rational(-1, 50), 6};
  p.add({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::LessEqual, 0);
  p.add({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::LessEqual, 0);
  p.add({0, 0, 1, 0}, Relation::LessEqual, 1);
  const Solution s = solve(p);
  CHECK(s.value == Rational(-1, 20));
  check_certificate(p, s);
}

TEST_CASE("random bounded LPs carry valid optimality certificates") {
  Engine rng(2024);
  int optimal = 0;
  for (int round = 0; round < 400; ++round) {
    Problem p;
    p.variable_count = lctkit::testing::uniform(rng, 1, 4);
    for (std::size_t j = 0; j < p.variable_count; ++j) p.objective.push_back(lctkit::testing::random_rational(rng, 5));
    const auto rows = lctkit::testing::uniform(rng, 1, 4);
    for (std::uint32_t i = 0; i < rows; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < p.variable_count; ++j) row.push_back(lctkit::testing::random_rational(rng, 5));
      const auto rel = static_cast<Relation>(lctkit::testing::uniform(rng, 0, 2));
      p.add(std::move(row), rel, lctkit::testing::random_rational(rng, 5));
    }
    // A box keeps the problem bounded.
    for (std::size_t j = 0; j < p.variable_count; ++j) {
      std::vector<Rational> row(p.variable_count);
      row[j] = 1;
      p.add(std::move(row), Relation::LessEqual, 10);
    }
    const Solution s = solve(p);
    CHECK(s.status != Status::Unbounded);
    if (s.status == Status::Optimal) {
      ++optimal;
      check_certificate(p, s);
    }
  }
  CHECK(optimal > 50);
}
