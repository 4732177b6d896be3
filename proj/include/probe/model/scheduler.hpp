#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "probe/model/partial_model.hpp"

namespace probe::model {

/// Memoryless deterministic scheduler: the action taken in each
/// nondeterministic state.
class Scheduler {
 public:
  Scheduler() = default;
  explicit Scheduler(std::map<StateId, Action> choices) : choices_(std::move(choices)) {}

  void set(StateId s, Action a) { choices_[s] = a; }
  std::optional<Action> at(StateId s) const;
  const std::map<StateId, Action>& choices() const { return choices_; }
  bool empty() const { return choices_.empty(); }
  std::string str() const;

  friend bool operator==(const Scheduler&, const Scheduler&) = default;

 private:
  std::map<StateId, Action> choices_;
};

/// The Markov chain induced by a scheduler: one distribution per state.
/// Holds a reference to the model, which must outlive the view.
class ChainView {
 public:
  /// Throws ModelError if the scheduler leaves a nondeterministic state open
  /// or picks an action that is not enabled.
  ChainView(const PartialModel& model, const Scheduler& scheduler);

  const PartialModel& model() const { return *model_; }
  size_t size() const { return selected_.size(); }
  std::span<const Entry> successors(StateId s) const { return model_->entries(model_->choices(s)[selected_[s]]); }
  const Choice& choice(StateId s) const { return model_->choices(s)[selected_[s]]; }

 private:
  const PartialModel* model_;
  std::vector<uint8_t> selected_;
};

ChainView induced_chain(const PartialModel& model, const Scheduler& scheduler);

/// States with more than one enabled action, in increasing id order.
std::vector<StateId> nondet_states(const PartialModel& model);

}  // namespace probe::model
