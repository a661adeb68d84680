#include "lctkit/newton/simplex_lp.hpp"

#include <optional>

#include "lctkit/core/error.hpp"

namespace lctkit::lp {

void Problem::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

// Tableau layout: columns [0, n) structural, [n, n + s) slack/surplus,
// [n + s, n + s + a) artificial, last column the right-hand side.
class Tableau {
 public:
  explicit Tableau(const Problem& p) : problem_(p) {
    const std::size_t m = p.constraints.size();
    n_ = p.variable_count;
    if (p.objective.size() != n_) throw DimensionMismatch(n_, p.objective.size());

    std::size_t slack_count = 0, artificial_count = 0;
    flip_.assign(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      if (c.coefficients.size() != n_) throw DimensionMismatch(n_, c.coefficients.size());
      flip_[i] = c.rhs.sign() < 0;
      const Relation r = effective(i);
      if (r != Relation::Equal) ++slack_count;
      if (r != Relation::LessEqual) ++artificial_count;
    }
    slack_begin_ = n_;
    artificial_begin_ = n_ + slack_count;
    width_ = artificial_begin_ + artificial_count;
    rows_.assign(m, std::vector<Rational>(width_ + 1));
    basis_.assign(m, 0);
    identity_column_.assign(m, 0);

    std::size_t next_slack = slack_begin_, next_artificial = artificial_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      auto& row = rows_[i];
      const Rational sign = flip_[i] ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) row[j] = c.coefficients[j] * sign;
      row[width_] = c.rhs * sign;
      switch (effective(i)) {
        case Relation::LessEqual:
          row[next_slack] = 1;
          basis_[i] = identity_column_[i] = next_slack++;
          break;
        case Relation::GreaterEqual:
          row[next_slack++] = -1;
          row[next_artificial] = 1;
          basis_[i] = identity_column_[i] = next_artificial++;
          break;
        case Relation::Equal:
          row[next_artificial] = 1;
          basis_[i] = identity_column_[i] = next_artificial++;
          break;
      }
    }
  }

  // Returns false if infeasible.
  bool phase_one() {
    if (artificial_begin_ == width_) return true;
    std::vector<Rational> cost(width_);
    for (std::size_t j = artificial_begin_; j < width_; ++j) cost[j] = 1;
    optimize(cost, width_);
    if (objective_value(cost).sign() > 0) return false;
    // Drive remaining (zero-valued) artificials out of the basis where a
    // structural or slack column can replace them.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < artificial_begin_) continue;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (!rows_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Returns false if unbounded.
  bool phase_two() {
    std::vector<Rational> cost(width_);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = problem_.objective[j];
    return optimize(cost, artificial_begin_);
  }

  Solution extract() const {
    Solution s;
    s.status = Status::Optimal;
    s.primal.assign(n_, Rational());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) s.primal[basis_[i]] = rows_[i][width_];
    for (std::size_t j = 0; j < n_; ++j) s.value += problem_.objective[j] * s.primal[j];
    // y = c_B B^{-1}; column identity_column_[i] of the current tableau is
    // B^{-1} e_i.
    s.dual.assign(rows_.size(), Rational());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational y;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t b = basis_[r];
        if (b < n_ && !problem_.objective[b].is_zero())
          y += problem_.objective[b] * rows_[r][identity_column_[i]];
      }
      s.dual[i] = flip_[i] ? -y : y;
    }
    return s;
  }

 private:
  Relation effective(std::size_t i) const {
    const Relation r = problem_.constraints[i].relation;
    if (!flip_[i] || r == Relation::Equal) return r;
    return r == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!cost[basis_[i]].is_zero()) v += cost[basis_[i]] * rows_[i][width_];
    return v;
  }

  // Minimizes cost over columns [0, allowed). Bland's rule: smallest entering
  // index with negative reduced cost, ties in the ratio test broken by the
  // smallest basic index.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (!cost[basis_[i]].is_zero() && !rows_[i][j].is_zero())
            reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced.sign() < 0) entering = j;
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = prow[c].reciprocal();
    for (auto& v : prow)
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      const Rational factor = rows_[i][c];
      for (std::size_t j = 0; j <= width_; ++j)
        if (!prow[j].is_zero()) rows_[i][j] -= factor * prow[j];
    }
    basis_[r] = c;
  }

  const Problem& problem_;
  std::size_t n_ = 0, slack_begin_ = 0, artificial_begin_ = 0, width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_column_;
  std::vector<bool> flip_;
};

}  // namespace

Solution solve(const Problem& problem) {
  Tableau t(problem);
  if (!t.phase_one()) return Solution{Status::Infeasible, {}, {}, {}};
  if (!t.phase_two()) return Solution{Status::Unbounded, {}, {}, {}};
  return t.extract();
}

bool feasible(const Problem& problem) {
  Tableau t(problem);
  return t.phase_one();
}

}  // namespace lctkit::lp
