#pragma once

#include <optional>

#include "probe/model/partial_model.hpp"
#include "probe/parametric/rational_function.hpp"
#include "probe/semantics/reward.hpp"

namespace probe::parametric {

/// Closed forms of the two parts of a conditional value.
struct EliminationResult {
  RationalFunction numerator;  // expected reward on reaching the sink
  RationalFunction bad;        // probability of violating an observation
  size_t eliminated = 0;

  RationalFunction denominator() const { return RationalFunction(1) - bad; }
  /// numerator / (1 - bad) at the point; empty when the denominator is 0
  /// there (Undefined). Throws IllDefinedPoint at a pole of either part.
  std::optional<Rational> value(const ParamValuation& valuation) const;
};

/// State elimination on a deterministic (possibly parametric) partial model.
/// Internal states other than the initial one are bypassed, cheapest first
/// by the degree sum of their edge weights with ties broken by id; self-loops
/// fold into 1/(1 - loop). Throws Error for nondeterministic models.
EliminationResult eliminate(const model::PartialModel& model, const semantics::RewardFunction& reward);

}  // namespace probe::parametric
