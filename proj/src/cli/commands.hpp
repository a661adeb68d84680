#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lctkit::cli {

/// Raised for invocations that are well-formed for the parser but missing or
/// combining inputs incorrectly. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ideal;
  std::string poly;
  std::string vars;
  std::string c;
  std::string weights;
  std::string order = "lexlow";
  std::string a;
  std::string m;
  std::string point;
  std::string mult;
  std::string suite = "colength";
  std::string name;
  std::vector<std::string> params;
  std::uint64_t n = 0;
  std::uint64_t box = 0;
  std::uint64_t d = 0;
  std::uint64_t deg_z = 0;
  std::uint64_t deg_w = 0;
  std::uint64_t deg_x = 0;
  std::uint64_t steps = 0;
  std::uint64_t codim = 0;
  std::uint32_t trunc = 0;
  std::uint32_t max_trunc = 32;
  bool strict = false;
  bool crossover = false;

  /// Flags that appeared on the command line, by long name without dashes.
  std::vector<std::string> present;
  bool has(const std::string& flag) const;
};

struct Outcome {
  nlohmann::json value;
  int exit_code = 0;
};

Outcome run_command(const std::string& name, const Options& opts);

/// Human-readable rendering of a JSON result.
void render_table(std::ostream& out, const nlohmann::json& value);

}  // namespace lctkit::cli
