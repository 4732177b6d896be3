#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "probe/model/partial_model.hpp"
#include "probe/semantics/semantics.hpp"

namespace probe::explorer {

using model::StateId;

enum class Heuristic : uint8_t { Bfs, MaxProbFirst };

struct ExplorationConfig {
  /// States materialized per round.
  uint64_t budget = 1'000'000;
  Heuristic heuristic = Heuristic::Bfs;
  uint32_t max_rounds = UINT32_MAX;
  /// Exploration stops once the model holds this many states.
  uint64_t max_states_total = 8'000'000;
};

struct ExpansionReport {
  uint32_t round = 0;
  uint64_t expanded = 0;
  uint64_t new_states = 0;
  uint64_t new_transitions = 0;
  bool fully_expanded = false;
  /// The state limit stopped the round before its budget was used.
  bool limit_reached = false;
  uint64_t frontier = 0;
  uint64_t states = 0;
  uint64_t transitions = 0;
};

/// Grows a partial model round by round. Within a round states are
/// materialized in heuristic order, so the result depends only on the
/// program and the configuration.
class Explorer {
 public:
  Explorer(std::shared_ptr<const semantics::Semantics> semantics, ExplorationConfig config = {});

  /// One round using the configured budget.
  ExpansionReport expand();
  ExpansionReport expand(uint64_t budget);

  model::PartialModel& model() { return model_; }
  const model::PartialModel& model() const { return model_; }
  const semantics::Semantics& semantics() const { return *semantics_; }
  const ExplorationConfig& config() const { return config_; }
  uint32_t rounds() const { return rounds_; }

 private:
  uint64_t expand_bfs(uint64_t budget);
  uint64_t expand_max_prob(uint64_t budget);
  bool at_limit() const { return model_.state_count() >= config_.max_states_total; }

  std::shared_ptr<const semantics::Semantics> semantics_;
  ExplorationConfig config_;
  model::PartialModel model_;
  StateId cursor_ = 0;
  uint32_t rounds_ = 0;
};

/// Upper bounds on the probability, under any scheduler, of reaching each
/// state from the initial one. Computed by pushing flow forward through the
/// component DAG, clamped to 1; nondeterministic states pass their full flow
/// along every action.
std::vector<double> forward_mass_bound(const model::PartialModel& model);

/// Maximal probability over schedulers of reaching `s` in the current
/// partial model. The model must be parameter-free.
double path_mass_upper_bound(const model::PartialModel& model, StateId s);

Heuristic parse_heuristic(const std::string& name);
std::string to_string(Heuristic heuristic);

}  // namespace probe::explorer
