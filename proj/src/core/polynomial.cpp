#include "lctkit/core/polynomial.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"

namespace lctkit {

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& coefficient) {
  Polynomial p(e.size());
  p.add_term(e, coefficient);
  return p;
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& value) {
  return monomial(ExponentVector(dimension), value);
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  require_same_dimension(dimension_, e.size());
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  require_same_dimension(dimension_, e.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_dimension(dimension_, rhs.dimension_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_dimension(dimension_, rhs.dimension_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_dimension(lhs.dimension_, rhs.dimension_);
  Polynomial r(lhs.dimension_);
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(dimension_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& shift) const {
  require_same_dimension(dimension_, shift.size());
  Polynomial r(dimension_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e + shift, v);
  return r;
}

Extended<std::uint64_t> order_at_origin(const Polynomial& p) {
  if (p.is_zero()) return Extended<std::uint64_t>::infinity();
  std::uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : p.terms()) best = std::min(best, e.degree());
  return best;
}

Extended<Rational> weight_of(const Polynomial& p, const WeightVector& w) {
  require_same_dimension(p.dimension(), w.size());
  if (p.is_zero()) return Extended<Rational>::infinity();
  std::optional<Rational> best;
  for (const auto& [e, c] : p.terms()) {
    Rational v = w.weigh(e);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

}  // namespace lctkit
