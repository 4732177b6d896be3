#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace probe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceLocation {
  uint32_t line = 0;
  uint32_t column = 0;

  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// Malformed program or property text.
class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation where, const std::string& message)
      : Error(where.str() + ": " + message), location_(where) {}
  SourceLocation location() const { return location_; }

 private:
  SourceLocation location_;
};

/// Well-formed text that violates a static program invariant.
class ValidationError : public Error {
 public:
  ValidationError(SourceLocation where, const std::string& message)
      : Error(where.str() + ": " + message), location_(where) {}
  SourceLocation location() const { return location_; }

 private:
  SourceLocation location_;
};

/// Runtime failure while building the operational model (empty unif range,
/// integer overflow, negative post-expectation, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero polynomial / rational function.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at a root of its denominator.
class IllDefinedPoint : public Error {
 public:
  using Error::Error;
};

/// A parameter valuation does not yield probability distributions.
class WellDefinednessViolation : public Error {
 public:
  using Error::Error;
};

/// Scheduler enumeration would exceed the configured cap.
class SchedulerExplosion : public Error {
 public:
  using Error::Error;
};

}  // namespace probe
