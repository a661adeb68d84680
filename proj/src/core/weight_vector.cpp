#include "lctkit/core/weight_vector.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight vector must be nonempty");
  for (const auto& w : weights_)
    if (w.sign() <= 0) throw DomainError("weights must be strictly positive, got " + w.str());
}

Rational WeightVector::weigh(const ExponentVector& e) const {
  require_same_dimension(size(), e.size());
  Rational total;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (e[i] != 0) total += weights_[i] * Rational(e[i]);
  return total;
}

Rational WeightVector::total() const {
  Rational t;
  for (const auto& w : weights_) t += w;
  return t;
}

}  // namespace lctkit
