#include "probe/checker/sparse_system.hpp"

namespace probe::checker {

using parametric::Rational;

template <typename V>
SparseSystem<V> snapshot(const model::PartialModel& m, const std::vector<V>& values, const model::Scheduler* sched) {
  SparseSystem<V> sys;
  size_t n = m.state_count();
  sys.state_begin.reserve(n + 1);
  sys.choice_begin.reserve(n + 1);
  sys.target.reserve(m.transition_count() + m.expandable_count());
  sys.prob.reserve(m.transition_count() + m.expandable_count());

  auto add_choice = [&](const model::Choice& c) {
    for (const model::Entry& e : m.entries(c)) {
      sys.target.push_back(e.target);
      sys.prob.push_back(values[e.weight]);
    }
    sys.choice_begin.push_back(static_cast<uint32_t>(sys.target.size()));
  };

  for (StateId s = 0; s < n; ++s) {
    auto choices = m.choices(s);
    if (sched && choices.size() > 1) {
      auto a = sched->at(s);
      if (!a) throw ModelError("scheduler does not resolve nondeterministic state " + std::to_string(s));
      bool found = false;
      for (const auto& c : choices) {
        if (c.action == *a) {
          add_choice(c);
          found = true;
          break;
        }
      }
      if (!found) throw ModelError("scheduler picks a disabled action in state " + std::to_string(s));
    } else {
      for (const auto& c : choices) add_choice(c);
    }
    sys.state_begin.push_back(static_cast<uint32_t>(sys.choice_begin.size() - 1));
  }
  return sys;
}

template <>
std::vector<double> weight_values<double>(const model::PartialModel& m) {
  if (m.weights().parametric()) throw Error("model has parametric weights; instantiate it first");
  return m.weights().approx_values();
}

template <>
std::vector<Rational> weight_values<Rational>(const model::PartialModel& m) {
  if (m.weights().parametric()) throw Error("model has parametric weights; instantiate it first");
  return m.weights().exact_values();
}

template SparseSystem<double> snapshot(const model::PartialModel&, const std::vector<double>&,
                                       const model::Scheduler*);
template SparseSystem<Rational> snapshot(const model::PartialModel&, const std::vector<Rational>&,
                                         const model::Scheduler*);

}  // namespace probe::checker
