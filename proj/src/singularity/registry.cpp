#include "lctkit/singularity/registry.hpp"

#include <json.hpp>

#include "lctkit/core/error.hpp"

namespace lctkit {

extern const char* const builtin_registry_json;

const char* to_string(RegistryStatus s) { return s == RegistryStatus::Verified ? "verified" : "recorded"; }

Registry Registry::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("registry is not valid JSON: ") + e.what());
  }
  Registry registry;
  try {
    registry.schema_version_ = doc.at("schema_version").get<int>();
    if (registry.schema_version_ != 1)
      throw DomainError("unsupported registry schema version " + std::to_string(registry.schema_version_));
    for (const auto& item : doc.at("entries")) {
      RegistryEntry entry;
      entry.name = item.at("name").get<std::string>();
      for (const auto& [key, value] : item.at("parameters").items())
        entry.parameters[key] = value.is_array() ? value.get<std::vector<long>>() : std::vector<long>{value.get<long>()};
      entry.threshold = Rational::parse(item.at("threshold").get<std::string>());
      entry.citation = item.at("citation").get<std::string>();
      const auto status = item.at("status").get<std::string>();
      if (status == "verified")
        entry.status = RegistryStatus::Verified;
      else if (status == "recorded")
        entry.status = RegistryStatus::Recorded;
      else
        throw DomainError("unknown registry status '" + status + "'");
      registry.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed registry: ") + e.what());
  }
  return registry;
}

const Registry& Registry::builtin() {
  static const Registry registry = from_json(builtin_registry_json);
  return registry;
}

const RegistryEntry& Registry::lookup(std::string_view name,
                                      const std::map<std::string, std::vector<long>>& parameters) const {
  const RegistryEntry* found = nullptr;
  std::size_t matches = 0;
  for (const auto& e : entries_) {
    if (e.name != name) continue;
    if (!parameters.empty() && e.parameters != parameters) continue;
    found = &e;
    ++matches;
  }
  if (matches == 0) throw DomainError("no registry entry '" + std::string(name) + "' with these parameters");
  if (matches > 1) throw DomainError("registry entry '" + std::string(name) + "' needs parameters");
  return *found;
}

const RegistryEntry& registry_lookup(std::string_view name,
                                     const std::map<std::string, std::vector<long>>& parameters) {
  return Registry::builtin().lookup(name, parameters);
}

}  // namespace lctkit
