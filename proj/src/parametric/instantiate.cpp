#include "probe/parametric/instantiate.hpp"

#include <memory>
#include <set>

namespace probe::parametric {

using model::PartialModel;
using model::StateId;

Instantiator::Instantiator(const PartialModel& m) : model_(&m) {
  std::set<std::vector<WeightId>> seen;
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (const auto& c : m.choices(s)) {
      std::vector<WeightId> ids;
      for (const auto& e : m.entries(c)) ids.push_back(e.weight);
      if (seen.insert(ids).second) distributions_.emplace_back(s, std::move(ids));
    }
  }
}

WeightTable Instantiator::table(const ParamValuation& u) const {
  const WeightTable& source = model_->weights();
  if (!(u.parameters() == source.parameters())) {
    throw Error("valuation " + u.str() + " does not match the model's parameters");
  }
  WeightTable table = source.evaluated(u);
  for (const auto& [s, ids] : distributions_) {
    Rational sum = 0;
    for (WeightId w : ids) {
      Rational v = table.exact(w);
      if (v < 0 || v > 1) {
        throw WellDefinednessViolation("at " + u.str() + ": state " + std::to_string(s) + " has weight " +
                                       source.str(w) + " = " + to_string(v) + " outside [0, 1]");
      }
      sum += v;
    }
    if (sum != 1) {
      throw WellDefinednessViolation("at " + u.str() + ": distribution of state " + std::to_string(s) +
                                     " sums to " + to_string(sum));
    }
  }
  return table;
}

std::vector<double> Instantiator::weights(const ParamValuation& u) const { return table(u).approx_values(); }

PartialModel Instantiator::model(const ParamValuation& u) const {
  PartialModel out = *model_;
  out.replace_weights(std::make_shared<WeightTable>(table(u)));
  return out;
}

PartialModel instantiate(const PartialModel& m, const ParamValuation& u) { return Instantiator(m).model(u); }

}  // namespace probe::parametric
