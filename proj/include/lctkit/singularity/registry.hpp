#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lctkit/core/rational.hpp"

namespace lctkit {

enum class RegistryStatus { Recorded, Verified };

const char* to_string(RegistryStatus s);

/// A literature threshold kept as data. Recorded entries are outside the reach
/// of the engines; verified ones are reproduced by weighted_lct or lct.
struct RegistryEntry {
  std::string name;
  std::map<std::string, std::vector<long>> parameters;
  Rational threshold;
  std::string citation;
  RegistryStatus status;
};

class Registry {
 public:
  /// Parses the JSON document format of data/registry.json.
  static Registry from_json(std::string_view text);
  /// The copy of data/registry.json compiled into the library.
  static const Registry& builtin();

  int schema_version() const { return schema_version_; }
  const std::vector<RegistryEntry>& entries() const { return entries_; }

  /// Exact match on name and parameters; with no parameters the name must be
  /// unique. Throws DomainError on unknown or ambiguous lookups.
  const RegistryEntry& lookup(std::string_view name,
                              const std::map<std::string, std::vector<long>>& parameters = {}) const;

 private:
  int schema_version_ = 0;
  std::vector<RegistryEntry> entries_;
};

const RegistryEntry& registry_lookup(std::string_view name,
                                     const std::map<std::string, std::vector<long>>& parameters = {});

}  // namespace lctkit
