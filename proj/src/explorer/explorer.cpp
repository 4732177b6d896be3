#include "probe/explorer/explorer.hpp"

#include <queue>

namespace probe::explorer {

using model::PartialModel;
using model::StateClass;

Explorer::Explorer(std::shared_ptr<const semantics::Semantics> sem, ExplorationConfig config)
    : semantics_(std::move(sem)), config_(config), model_(semantics_->initial(), semantics_->weights_ptr()) {
  if (config_.budget == 0) throw Error("exploration budget must be at least 1");
}

ExpansionReport Explorer::expand() { return expand(config_.budget); }

ExpansionReport Explorer::expand(uint64_t budget) {
  ExpansionReport r;
  size_t states_before = model_.state_count();
  size_t transitions_before = model_.transition_count();
  ++rounds_;
  r.round = rounds_;

  bool by_mass = config_.heuristic == Heuristic::MaxProbFirst && !model_.weights().parametric();
  r.expanded = by_mass ? expand_max_prob(budget) : expand_bfs(budget);

  r.new_states = model_.state_count() - states_before;
  r.new_transitions = model_.transition_count() - transitions_before;
  r.fully_expanded = model_.fully_expanded();
  r.limit_reached = !r.fully_expanded && r.expanded < budget && at_limit();
  r.frontier = model_.expandable_count();
  r.states = model_.state_count();
  r.transitions = model_.transition_count();
  return r;
}

uint64_t Explorer::expand_bfs(uint64_t budget) {
  // New states receive increasing ids in discovery order, so materializing
  // by id is breadth-first.
  uint64_t done = 0;
  while (done < budget && cursor_ < model_.state_count() && !at_limit()) {
    StateId s = cursor_++;
    if (model_.state_class(s) != StateClass::Expandable) continue;
    model_.materialize(s, semantics_->step(model_.configuration(s)));
    ++done;
  }
  return done;
}

uint64_t Explorer::expand_max_prob(uint64_t budget) {
  std::vector<double> mass = forward_mass_bound(model_);
  struct Item {
    double key;
    StateId id;
    bool operator<(const Item& o) const { return key != o.key ? key < o.key : id > o.id; }
  };
  std::priority_queue<Item> queue;
  for (StateId s = 0; s < model_.state_count(); ++s) {
    if (model_.state_class(s) == StateClass::Expandable) queue.push({mass[s], s});
  }

  const auto& weights = model_.weights();
  uint64_t done = 0;
  while (done < budget && !queue.empty() && !at_limit()) {
    Item top = queue.top();
    queue.pop();
    if (model_.state_class(top.id) != StateClass::Expandable) continue;
    size_t before = model_.state_count();
    model_.materialize(top.id, semantics_->step(model_.configuration(top.id)));
    ++done;
    // Fresh states inherit their parent's key scaled by the edge weight.
    for (const auto& c : model_.choices(top.id)) {
      for (const auto& e : model_.entries(c)) {
        if (e.target >= before && model_.state_class(e.target) == StateClass::Expandable) {
          queue.push({top.key * weights.approx(e.weight), e.target});
        }
      }
    }
  }
  return done;
}

Heuristic parse_heuristic(const std::string& name) {
  if (name == "bfs") return Heuristic::Bfs;
  if (name == "maxprob") return Heuristic::MaxProbFirst;
  throw Error("unknown heuristic '" + name + "' (expected bfs or maxprob)");
}

std::string to_string(Heuristic h) { return h == Heuristic::Bfs ? "bfs" : "maxprob"; }

}  // namespace probe::explorer
