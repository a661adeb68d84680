#include "lctkit/initial/term_order.hpp"

#include <algorithm>

#include "lctkit/core/error.hpp"

namespace lctkit {

bool TermOrder::is_degree_compatible() const {
  if (!weights_) return false;
  const auto& w = weights_->weights();
  return std::all_of(w.begin(), w.end(), [&](const Rational& v) { return v == w.front(); });
}

bool TermOrder::less(const ExponentVector& a, const ExponentVector& b) const {
  if (weights_) {
    const Rational wa = weights_->weigh(a), wb = weights_->weigh(b);
    if (wa != wb) return wa < wb;
  }
  return a < b;
}

ExponentVector TermOrder::lowest_term(const Polynomial& p) const {
  if (p.is_zero()) throw DomainError("the zero polynomial has no lowest term");
  const auto& terms = p.terms();
  if (!weights_) return terms.begin()->first;
  auto best = terms.begin();
  Rational best_weight = weights_->weigh(best->first);
  for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
    const Rational w = weights_->weigh(it->first);
    if (w < best_weight) best = it, best_weight = w;
  }
  return best->first;
}

std::string TermOrder::str() const {
  if (!weights_) return "lexlow";
  std::string out = "weight(";
  for (std::size_t i = 0; i < weights_->size(); ++i) out += (i ? "," : "") + (*weights_)[i].str();
  return out + ")";
}

}  // namespace lctkit
