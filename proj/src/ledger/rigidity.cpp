#include "lctkit/ledger/rigidity.hpp"

#include <string>

#include "lctkit/core/error.hpp"

namespace lctkit {

const char* to_string(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::Contradiction: return "contradiction";
    case RigidityVerdict::Equality: return "equality";
    case RigidityVerdict::NoContradiction: return "no-contradiction";
  }
  return "?";
}

RigidityVerdict rigidity_verdict_from_string(std::string_view text) {
  for (auto v : {RigidityVerdict::Contradiction, RigidityVerdict::Equality, RigidityVerdict::NoContradiction})
    if (text == to_string(v)) return v;
  throw DomainError("unknown rigidity verdict '" + std::string(text) + "'");
}

RigidityReport rigidity_check(std::uint64_t n) {
  if (n < 3) throw DomainError("rigidity_check needs n >= 3");
  if (n > (1u << 20)) throw LimitExceeded("rigidity_check is limited to n <= 2^20");
  RigidityReport r;
  r.n = n;
  r.h0 = binomial(n + 2, 2);
  r.bound_basic = Rational(power(3, n - 1), BigInt(2));
  r.bound_improved = r.bound_basic + Rational(3, 2);
  const Rational h0(r.h0);
  if (h0 < r.bound_basic)
    r.verdict = RigidityVerdict::Contradiction;
  else if (h0 == r.bound_improved)
    r.verdict = RigidityVerdict::Equality;
  else
    r.verdict = RigidityVerdict::NoContradiction;
  return r;
}

}  // namespace lctkit
