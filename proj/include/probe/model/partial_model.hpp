#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "probe/parametric/weight_table.hpp"
#include "probe/semantics/reward.hpp"
#include "probe/semantics/semantics.hpp"

namespace probe::model {

using StateId = uint32_t;
using parametric::Rational;
using parametric::WeightId;
using semantics::Action;
using semantics::Configuration;

inline constexpr StateId kNoState = UINT32_MAX;

enum class StateClass : uint8_t { Expandable, Internal, Term, Bad, Sink };

struct Entry {
  WeightId weight;
  StateId target;
};

struct Choice {
  Action action;
  uint32_t begin;  // range into the entry array
  uint32_t end;
};

/// Terminal-state rewards for one reward function, parallel to term_states().
struct RewardVector {
  std::vector<Rational> exact;
  std::vector<double> approx;
};

/// The explored fragment of the operational MDP. State 0 is the initial
/// configuration and state 1 is the sink. A Run configuration is Expandable
/// (a probability-1 self-loop) until materialize() installs its real
/// transitions. Terminated and Bad configurations get their single edge to
/// the sink as soon as they are interned.
///
/// Single writer; concurrent readers are fine between mutations.
class PartialModel {
 public:
  static constexpr StateId kInitial = 0;
  static constexpr StateId kSink = 1;

  PartialModel(const Configuration& initial, std::shared_ptr<parametric::WeightTable> weights);

  /// Id of the configuration and whether it was created by this call.
  std::pair<StateId, bool> intern(const Configuration& config);
  std::optional<StateId> find(const Configuration& config) const;

  /// Installs the transitions of an Expandable state, interning successors.
  /// Throws ModelError if the state was already materialized.
  void materialize(StateId s, const semantics::StepResult& result);

  size_t state_count() const { return classes_.size(); }
  /// Edges of all materialized states (expandable self-loops excluded).
  size_t transition_count() const { return transition_count_; }
  size_t expandable_count() const { return expandable_count_; }
  bool fully_expanded() const { return expandable_count_ == 0; }

  StateClass state_class(StateId s) const { return classes_[s]; }
  Configuration configuration(StateId s) const;

  std::span<const Choice> choices(StateId s) const {
    return {choices_.data() + choice_begin_[s], choices_.data() + choice_end_[s]};
  }
  std::span<const Entry> entries(const Choice& c) const {
    return {entries_.data() + c.begin, entries_.data() + c.end};
  }
  bool nondeterministic(StateId s) const { return choice_end_[s] - choice_begin_[s] > 1; }

  std::optional<StateId> bad_state() const {
    return bad_ == kNoState ? std::nullopt : std::optional<StateId>(bad_);
  }
  /// Terminated states in increasing id order.
  const std::vector<StateId>& term_states() const { return term_states_; }

  /// Rewards of the terminated states under `reward`, extended
  /// incrementally as new terminated states appear.
  const RewardVector& rewards(const semantics::RewardFunction& reward);
  /// Reward of a single state (0 unless terminated).
  Rational reward(StateId s, const semantics::RewardFunction& reward) const;

  parametric::WeightTable& weights() const { return *weights_; }
  const std::shared_ptr<parametric::WeightTable>& weights_ptr() const { return weights_; }
  /// Swaps in a table with the same ids (used to instantiate parameters).
  void replace_weights(std::shared_ptr<parametric::WeightTable> weights) { weights_ = std::move(weights); }

 private:
  StateId add_state(const std::string& key, StateClass cls);
  void set_single_edge(StateId s, StateId target);
  uint64_t hash_key(std::string_view key) const;
  std::string_view key(StateId s) const {
    return {arena_.data() + key_offset_[s], static_cast<size_t>(key_offset_[s + 1] - key_offset_[s])};
  }
  void grow_table();

  std::shared_ptr<parametric::WeightTable> weights_;

  std::vector<char> arena_;
  std::vector<uint64_t> key_offset_{0};  // state s owns [key_offset_[s], key_offset_[s+1])
  std::vector<uint32_t> table_;          // open addressing over state ids
  std::vector<uint64_t> hashes_;

  std::vector<StateClass> classes_;
  std::vector<uint32_t> choice_begin_;
  std::vector<uint32_t> choice_end_;
  std::vector<Choice> choices_;
  std::vector<Entry> entries_;

  std::vector<StateId> term_states_;
  StateId bad_ = kNoState;
  size_t transition_count_ = 0;
  size_t expandable_count_ = 0;

  std::map<std::string, RewardVector> reward_cache_;
};

std::string to_string(StateClass cls);

}  // namespace probe::model
