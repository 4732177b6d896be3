#pragma once

#include <vector>

#include "probe/model/partial_model.hpp"

namespace probe::parametric {

/// The model with every weight evaluated at `valuation`. Throws
/// WellDefinednessViolation unless each weight lies in [0, 1] and each
/// distribution sums to 1, and IllDefinedPoint if a weight's denominator
/// vanishes. A parameter-free model at the empty valuation is copied as is.
model::PartialModel instantiate(const model::PartialModel& model, const ParamValuation& valuation);

/// Repeated instantiation of one model. The distinct distributions are
/// collected once, so checking a valuation costs time in the number of
/// distinct weight combinations rather than in the model size.
class Instantiator {
 public:
  explicit Instantiator(const model::PartialModel& model);

  /// Evaluated and checked weight table.
  WeightTable table(const ParamValuation& valuation) const;
  /// Checked weight values as doubles, indexed by weight id.
  std::vector<double> weights(const ParamValuation& valuation) const;
  model::PartialModel model(const ParamValuation& valuation) const;

 private:
  const model::PartialModel* model_;
  /// Weight ids of each distinct distribution, with one state using it.
  std::vector<std::pair<model::StateId, std::vector<WeightId>>> distributions_;
};

}  // namespace probe::parametric
