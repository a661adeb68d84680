#include "lctkit/ledger/report_json.hpp"

#include "lctkit/core/error.hpp"

namespace lctkit {

using nlohmann::json;

json rational_json(const Rational& q) { return q.fraction(); }

json rational_json(const Extended<Rational>& q) { return q.is_infinite() ? json("inf") : rational_json(q.value()); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Extended<Rational> extended_from_json(const json& j) {
  if (j == "inf") return Extended<Rational>::infinity();
  return rational_from_json(j);
}

namespace {

json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  return BigInt(j.get<std::string>());
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

json to_json(const RigidityReport& r) {
  return {{"n", r.n},
          {"h0", big_json(r.h0)},
          {"bound_basic", rational_json(r.bound_basic)},
          {"bound_improved", rational_json(r.bound_improved)},
          {"verdict", to_string(r.verdict)}};
}

RigidityReport rigidity_from_json(const json& j) {
  return guarded([&] {
    RigidityReport r;
    r.n = j.at("n").get<std::uint64_t>();
    r.h0 = big_from_json(j.at("h0"));
    r.bound_basic = rational_from_json(j.at("bound_basic"));
    r.bound_improved = rational_from_json(j.at("bound_improved"));
    r.verdict = rigidity_verdict_from_string(j.at("verdict").get<std::string>());
    return r;
  });
}

json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item = {{"ideal", f.ideal}, {"check", f.check}, {"reason", f.reason}};
    item["c"] = f.c ? rational_json(*f.c) : json(nullptr);
    failures.push_back(std::move(item));
  }
  return {{"suite", r.suite},
          {"universe", {{"n", r.universe.n}, {"box", r.universe.box}, {"description", r.universe.description}}},
          {"instances_checked", r.instances_checked},
          {"failures", std::move(failures)},
          {"passed", r.passed()},
          {"statistics", r.statistics},
          {"runtime_note", r.runtime_note}};
}

VerificationReport verification_from_json(const json& j) {
  return guarded([&] {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    const auto& u = j.at("universe");
    r.universe = {u.at("n").get<std::uint64_t>(), u.at("box").get<std::uint64_t>(),
                  u.at("description").get<std::string>()};
    r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) {
      VerificationFailure failure{f.at("ideal").get<std::string>(), std::nullopt, f.at("check").get<std::string>(),
                                  f.at("reason").get<std::string>()};
      if (!f.at("c").is_null()) failure.c = rational_from_json(f.at("c"));
      r.failures.push_back(std::move(failure));
    }
    r.statistics = j.at("statistics").get<std::map<std::string, std::string>>();
    r.runtime_note = j.at("runtime_note").get<std::string>();
    return r;
  });
}

}  // namespace lctkit
