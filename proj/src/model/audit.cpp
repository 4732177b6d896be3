#include "probe/model/dump.hpp"

namespace probe::model {

namespace {

bool single_edge_to(const PartialModel& m, StateId s, StateId target) {
  auto choices = m.choices(s);
  if (choices.size() != 1) return false;
  auto edges = m.entries(choices[0]);
  return edges.size() == 1 && edges[0].target == target && edges[0].weight == parametric::WeightTable::kOne;
}

}  // namespace

std::vector<std::string> audit(const PartialModel& m, const semantics::RewardFunction* reward) {
  std::vector<std::string> problems;
  auto report = [&](StateId s, const std::string& what) {
    problems.push_back("state " + std::to_string(s) + " (" + to_string(m.state_class(s)) + "): " + what);
  };
  const auto& weights = m.weights();
  size_t sinks = 0;
  size_t bads = 0;
  for (StateId s = 0; s < m.state_count(); ++s) {
    StateClass cls = m.state_class(s);
    switch (cls) {
      case StateClass::Expandable:
        if (!single_edge_to(m, s, s)) report(s, "expandable state without a lone self-loop");
        break;
      case StateClass::Sink:
        ++sinks;
        if (!single_edge_to(m, s, s)) report(s, "sink without a lone self-loop");
        break;
      case StateClass::Term:
      case StateClass::Bad:
        bads += cls == StateClass::Bad;
        if (!single_edge_to(m, s, PartialModel::kSink)) report(s, "expected a single edge to the sink");
        break;
      case StateClass::Internal:
        break;
    }
    if (m.choices(s).empty()) report(s, "no enabled action");
    for (const Choice& c : m.choices(s)) {
      Rational sum = 0;
      bool constant = true;
      for (const Entry& e : m.entries(c)) {
        if (e.target >= m.state_count()) report(s, "edge to unknown state");
        if (!weights.is_constant(e.weight)) {
          constant = false;
          continue;
        }
        Rational w = weights.exact(e.weight);
        if (w < 0 || w > 1) report(s, "weight " + w.get_str() + " outside [0, 1]");
        sum += w;
      }
      if (constant && sum != 1) report(s, "distribution sums to " + sum.get_str());
    }
    if (reward && cls != StateClass::Term && m.reward(s, *reward) != 0) report(s, "reward on a non-terminal state");
  }
  if (sinks != 1) problems.push_back("expected exactly one sink, found " + std::to_string(sinks));
  if (bads > 1) problems.push_back("more than one bad state");
  return problems;
}

}  // namespace probe::model
