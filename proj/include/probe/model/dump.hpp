#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "probe/model/partial_model.hpp"

namespace probe::model {

/// Line-oriented text form of a model:
///   STATE <id> <class> <reward>
///   TRANS <id> <action> (<weight> <target>)+
/// Weights are printed without spaces. With no reward function every reward
/// prints as 0.
void dump(const PartialModel& model, const semantics::RewardFunction* reward, std::ostream& out);
std::string dump(const PartialModel& model, const semantics::RewardFunction* reward = nullptr);

/// Well-formedness violations, empty for a sound model: expandable states and
/// the sink carry only a self-loop, terminated and bad states a single edge to
/// the sink, parameter-free distributions sum to exactly 1, and only
/// terminated states earn reward.
std::vector<std::string> audit(const PartialModel& model, const semantics::RewardFunction* reward = nullptr);

}  // namespace probe::model
