#include "probe/semantics/reward.hpp"

#include "probe/frontend/printer.hpp"

namespace probe::semantics {

RewardFunction::RewardFunction(const frontend::Property& property)
    : objective_(property.objective), target_(property.target), key_(property.reward_key()) {
  if (!objective_ && !target_) target_ = frontend::truth(true);
}

RewardFunction RewardFunction::constant_one() {
  RewardFunction f;
  f.target_ = frontend::truth(true);
  f.key_ = "P[true]";
  return f;
}

parametric::Rational RewardFunction::at(const Valuation& sigma) const {
  if (target_) return eval(*target_, sigma) ? 1 : 0;
  Value v = eval(*objective_, sigma);
  if (v < 0) {
    throw ModelError("post-expectation " + frontend::print(*objective_) + " is negative (" + std::to_string(v) +
                     ") at a terminal state");
  }
  return parametric::Rational(static_cast<long>(v));
}

parametric::Rational RewardFunction::operator()(const Configuration& c) const {
  if (c.kind != ConfigKind::Term) return 0;
  return at(c.valuation);
}

}  // namespace probe::semantics
