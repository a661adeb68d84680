#pragma once

#include <cstddef>
#include <vector>

#include "lctkit/core/rational.hpp"

namespace lctkit::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// minimize objective . x  subject to the constraints and x >= 0.
struct Problem {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

/// For an optimal solution `dual` holds one multiplier y_i per constraint with
///   sum_i y_i A_i <= objective   (componentwise, over the x >= 0 columns)
///   sum_i y_i b_i == value
/// and y_i <= 0 on <= rows, y_i >= 0 on >= rows (minimization convention).
struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Two-phase dense simplex over exact rationals with Bland's rule, so it
/// terminates on degenerate problems.
Solution solve(const Problem& problem);

/// Only checks feasibility (phase one).
bool feasible(const Problem& problem);

}  // namespace lctkit::lp
