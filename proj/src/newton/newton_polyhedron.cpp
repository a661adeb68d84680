#include "lctkit/newton/newton_polyhedron.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"
#include "lctkit/newton/simplex_lp.hpp"

namespace lctkit {

namespace {

// Rows: sum_i lambda_i g_ij (+ extra_j) <= rhs_j for each coordinate j, then
// sum_i lambda_i = 1. Extra columns are appended after the lambdas.
lp::Problem hull_problem(const std::vector<ExponentVector>& vertices, std::size_t dimension,
                         std::size_t extra_columns) {
  lp::Problem p;
  p.variable_count = vertices.size() + extra_columns;
  p.objective.assign(p.variable_count, Rational());
  for (std::size_t j = 0; j < dimension; ++j) {
    std::vector<Rational> row(p.variable_count);
    for (std::size_t i = 0; i < vertices.size(); ++i) row[i] = vertices[i][j];
    p.add(std::move(row), lp::Relation::LessEqual, 0);
  }
  std::vector<Rational> convex(p.variable_count);
  for (std::size_t i = 0; i < vertices.size(); ++i) convex[i] = 1;
  p.add(std::move(convex), lp::Relation::Equal, 1);
  return p;
}

bool dominated_by_vertex(const std::vector<ExponentVector>& vertices, std::span<const Rational> q) {
  return std::any_of(vertices.begin(), vertices.end(), [&](const ExponentVector& g) {
    for (std::size_t j = 0; j < q.size(); ++j)
      if (Rational(g[j]) > q[j]) return false;
    return true;
  });
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : dimension_(ideal.dimension()), vertices_(ideal.generators()) {}

bool NewtonPolyhedron::is_orthant() const {
  return vertices_.size() == 1 && vertices_.front().is_zero();
}

bool NewtonPolyhedron::contains(std::span<const Rational> q) const {
  require_same_dimension(dimension_, q.size());
  for (const auto& v : q)
    if (v.sign() < 0) return false;
  if (dominated_by_vertex(vertices_, q)) return true;
  lp::Problem p = hull_problem(vertices_, dimension_, 0);
  for (std::size_t j = 0; j < dimension_; ++j) p.constraints[j].rhs = q[j];
  return lp::feasible(p);
}

bool NewtonPolyhedron::contains(const ExponentVector& q) const {
  require_same_dimension(dimension_, q.size());
  RationalVector r(q.begin(), q.end());
  return contains(r);
}

bool NewtonPolyhedron::contains_scaled(std::span<const Rational> q, const Rational& scale) const {
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  RationalVector r(q.begin(), q.end());
  for (auto& v : r) v /= scale;
  return contains(r);
}

bool NewtonPolyhedron::interior_contains_scaled(std::span<const Rational> q,
                                                const Rational& scale) const {
  require_same_dimension(dimension_, q.size());
  if (scale.sign() <= 0) throw DomainError("scale must be positive");
  // maximize s subject to sum lambda_i g_i + s*(1,...,1) <= q / scale.
  lp::Problem p = hull_problem(vertices_, dimension_, 1);
  const std::size_t s = vertices_.size();
  for (std::size_t j = 0; j < dimension_; ++j) {
    p.constraints[j].coefficients[s] = 1;
    p.constraints[j].rhs = q[j] / scale;
  }
  p.objective[s] = -1;
  const lp::Solution sol = lp::solve(p);
  return sol.status == lp::Status::Optimal && sol.value.sign() < 0;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) { return NewtonPolyhedron(ideal); }

bool is_supporting_normal(const NewtonPolyhedron& p, const Rational& xi,
                          std::span<const Rational> normal) {
  require_same_dimension(p.dimension(), normal.size());
  Rational sum;
  for (const auto& a : normal) {
    if (a.sign() < 0) return false;
    sum += a;
  }
  if (sum.sign() <= 0) return false;
  bool touches = false;
  for (const auto& g : p.vertex_candidates()) {
    Rational value;
    for (std::size_t j = 0; j < normal.size(); ++j) value += normal[j] * Rational(g[j]);
    const Rational bound = xi * sum;
    if (value < bound) return false;
    if (value == bound) touches = true;
  }
  return touches;
}

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
  BigInt common = 1;
  for (const auto& r : v) {
    if (r.sign() < 0) throw DomainError("expected a nonnegative vector");
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), r.denominator().get_mpz_t());
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& r : v) {
    out.push_back(r.numerator() * (common / r.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

namespace {

// minimize t subject to sum lambda_i g_i - t*(1,...,1) <= 0, sum lambda = 1.
lp::Solution diagonal_lp(const NewtonPolyhedron& poly) {
  const auto& vertices = poly.vertex_candidates();
  const std::size_t n = poly.dimension();
  const std::size_t k = vertices.size();
  lp::Problem p = hull_problem(vertices, n, 1);
  for (std::size_t j = 0; j < n; ++j) p.constraints[j].coefficients[k] = -1;
  p.objective[k] = 1;
  lp::Solution sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal) throw Error("diagonal LP did not reach an optimum");
  return sol;
}

}  // namespace

std::optional<Rational> diagonal_value(const NewtonPolyhedron& poly) {
  if (poly.is_orthant()) return std::nullopt;
  return diagonal_lp(poly).value;
}

std::optional<DiagonalCrossing> diagonal_crossing(const NewtonPolyhedron& poly) {
  if (poly.is_orthant()) return std::nullopt;
  const auto& vertices = poly.vertex_candidates();
  const std::size_t n = poly.dimension();
  const lp::Solution sol = diagonal_lp(poly);

  DiagonalCrossing out;
  out.xi = sol.value;
  Rational sum;
  for (std::size_t j = 0; j < n; ++j) {
    out.dual_normal.push_back(-sol.dual[j]);
    sum += out.dual_normal.back();
  }
  for (auto& a : out.dual_normal) a /= sum;

  // Lexicographic minimum over {a >= 0, sum a = n, a.g >= xi*n}.
  const Rational target = out.xi * Rational(n);
  std::vector<Rational> fixed;
  for (std::size_t coord = 0; coord < n; ++coord) {
    lp::Problem q;
    q.variable_count = n;
    q.objective.assign(n, Rational());
    q.objective[coord] = 1;
    q.add(RationalVector(n, Rational(1)), lp::Relation::Equal, Rational(n));
    for (const auto& g : vertices) q.add(RationalVector(g.begin(), g.end()), lp::Relation::GreaterEqual, target);
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      RationalVector row(n);
      row[j] = 1;
      q.add(std::move(row), lp::Relation::Equal, fixed[j]);
    }
    const lp::Solution s = lp::solve(q);
    if (s.status != lp::Status::Optimal) throw Error("canonical normal LP did not reach an optimum");
    fixed.push_back(s.value);
  }
  out.canonical_normal = std::move(fixed);
  out.integer_normal = primitive_integer_vector(out.canonical_normal);
  return out;
}

}  // namespace lctkit
