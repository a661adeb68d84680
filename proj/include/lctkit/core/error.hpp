#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lctkit {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1 with a machine-readable error object.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  const char* kind() const noexcept override { return "parse_error"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
  const char* kind() const noexcept override { return "dimension_mismatch"; }
};

/// Precondition violation on a value (nonpositive weight, empty list, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain_error"; }
};

/// A bounded computation ran into its configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "limit_exceeded"; }
};

}  // namespace lctkit
