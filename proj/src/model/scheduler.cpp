#include "probe/model/scheduler.hpp"

#include <sstream>

namespace probe::model {

std::optional<Action> Scheduler::at(StateId s) const {
  auto it = choices_.find(s);
  if (it == choices_.end()) return std::nullopt;
  return it->second;
}

std::string Scheduler::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, a] : choices_) {
    out << (first ? "" : " ") << s << ":" << semantics::to_string(a);
    first = false;
  }
  return out.str();
}

ChainView::ChainView(const PartialModel& model, const Scheduler& scheduler)
    : model_(&model), selected_(model.state_count(), 0) {
  for (StateId s = 0; s < model.state_count(); ++s) {
    if (!model.nondeterministic(s)) continue;
    auto a = scheduler.at(s);
    if (!a) throw ModelError("scheduler does not resolve nondeterministic state " + std::to_string(s));
    auto choices = model.choices(s);
    bool found = false;
    for (size_t i = 0; i < choices.size(); ++i) {
      if (choices[i].action == *a) {
        selected_[s] = static_cast<uint8_t>(i);
        found = true;
      }
    }
    if (!found) {
      throw ModelError("scheduler picks disabled action " + semantics::to_string(*a) + " in state " +
                       std::to_string(s));
    }
  }
}

ChainView induced_chain(const PartialModel& model, const Scheduler& scheduler) {
  return ChainView(model, scheduler);
}

std::vector<StateId> nondet_states(const PartialModel& model) {
  std::vector<StateId> out;
  for (StateId s = 0; s < model.state_count(); ++s) {
    if (model.nondeterministic(s)) out.push_back(s);
  }
  return out;
}

}  // namespace probe::model
