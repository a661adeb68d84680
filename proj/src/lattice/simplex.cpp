#include "lctkit/lattice/simplex.hpp"

#include <numeric>

#include "lctkit/core/error.hpp"

namespace lctkit {

SimplexSpec::SimplexSpec(std::vector<Rational> normal) : normal_(std::move(normal)) {
  if (normal_.empty()) throw DomainError("simplex normal must be nonempty");
  BigInt common = 1;
  for (const auto& a : normal_) {
    if (a.sign() <= 0) throw DomainError("simplex normal entries must be strictly positive");
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.denominator().get_mpz_t());
  }
  budget_ = 0;
  for (const auto& a : normal_) {
    scaled_.push_back(a.numerator() * (common / a.denominator()));
    budget_ += scaled_.back();
  }
}

bool SimplexSpec::contains(const ExponentVector& r) const {
  require_same_dimension(dimension(), r.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) total += scaled_[i] * r[i];
  return total <= budget_;
}

namespace {

struct Walker {
  const std::vector<BigInt>& a;
  std::uint64_t count = 0;

  // The last coordinate is counted in closed form.
  void count_from(std::size_t i, const BigInt& remaining) {
    if (i + 1 == a.size()) {
      const BigInt last = remaining / a[i];
      count += last.get_ui() + 1;
      return;
    }
    BigInt left = remaining;
    while (left >= 0) {
      count_from(i + 1, left);
      left -= a[i];
    }
  }

  void visit_from(std::size_t i, const BigInt& remaining, ExponentVector& r,
                  const std::function<void(const ExponentVector&)>& visit) {
    if (i == a.size()) {
      visit(r);
      return;
    }
    BigInt left = remaining;
    for (r[i] = 0; left >= 0; ++r[i], left -= a[i]) visit_from(i + 1, left, r, visit);
    r[i] = 0;
  }
};

}  // namespace

std::uint64_t simplex_count(const SimplexSpec& s) {
  const auto& a = s.integer_normal();
  const BigInt budget = std::accumulate(a.begin(), a.end(), BigInt(0));
  Walker walker{a};
  walker.count_from(0, budget);
  return walker.count;
}

void for_each_simplex_point(const SimplexSpec& s, const std::function<void(const ExponentVector&)>& visit) {
  const auto& a = s.integer_normal();
  const BigInt budget = std::accumulate(a.begin(), a.end(), BigInt(0));
  Walker walker{a};
  ExponentVector r(a.size());
  walker.visit_from(0, budget, r, visit);
}

}  // namespace lctkit
