#pragma once

#include <json.hpp>

#include "lctkit/core/extended.hpp"
#include "lctkit/core/rational.hpp"
#include "lctkit/ledger/rigidity.hpp"
#include "lctkit/ledger/verification.hpp"

namespace lctkit {

/// Rationals travel as "p/q" strings (always with a denominator); infinity as "inf".
nlohmann::json rational_json(const Rational& q);
nlohmann::json rational_json(const Extended<Rational>& q);
Rational rational_from_json(const nlohmann::json& j);
Extended<Rational> extended_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RigidityReport& r);
RigidityReport rigidity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const nlohmann::json& j);

}  // namespace lctkit
