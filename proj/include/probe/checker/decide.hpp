#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "probe/checker/conditional.hpp"
#include "probe/frontend/property.hpp"

namespace probe::checker {

/// Undefined is reported when a fully expanded model has denominator 0; it
/// is an outcome, not a verdict on the property.
enum class Outcome : uint8_t { Proven, Refuted, Unknown, Undefined };

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<Quantity> value;
  uint32_t iteration = 0;
};

/// A growing lower bound settles `>=`/`>` once it reaches the threshold and
/// refutes `<=`/`<` once it passes it; later expansions cannot undo either.
/// On a fully expanded model the value is exact and decides every
/// comparison.
Outcome decide(const frontend::Property& property, const ConditionalResult& result, bool fully_expanded);

/// `value cmp threshold`, exactly when the value is exact.
bool satisfies(const Quantity& value, frontend::Comparison comparison, const parametric::Rational& threshold);

bool final(Outcome outcome);
std::string to_string(Outcome outcome);

}  // namespace probe::checker
