#include "probe/checker/conditional.hpp"

#include <cstdio>
#include <deque>

namespace probe::checker {

using frontend::SchedulerMode;
using model::PartialModel;
using model::Scheduler;
using model::StateId;

namespace {

Optimize to_optimize(SchedulerMode mode) { return mode == SchedulerMode::Min ? Optimize::Min : Optimize::Max; }

/// Calls visit(t) for every successor of s among the actions in play.
template <typename F>
void for_each_successor(const PartialModel& m, StateId s, const Scheduler* sched, F&& visit) {
  auto choices = m.choices(s);
  std::optional<semantics::Action> pick;
  if (sched && choices.size() > 1) pick = sched->at(s);
  for (const auto& c : choices) {
    if (pick && c.action != *pick) continue;
    for (const auto& e : m.entries(c)) visit(e.target);
  }
}

/// States reachable from the initial state without leaving `stop`.
std::vector<char> forward_reach(const PartialModel& m, const Scheduler* sched, StateId stop = model::kNoState) {
  std::vector<char> seen(m.state_count(), 0);
  std::deque<StateId> queue{PartialModel::kInitial};
  seen[PartialModel::kInitial] = 1;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (s == stop) continue;
    for_each_successor(m, s, sched, [&](StateId t) {
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    });
  }
  return seen;
}

/// Whether the chain reaches Bad with probability exactly 1: every state
/// reachable before Bad can still reach it. Decided on the graph, so
/// floating-point noise cannot turn 0/0 into a number.
bool bad_almost_sure(const PartialModel& m, const Scheduler* sched) {
  auto bad = m.bad_state();
  if (!bad) return false;
  size_t n = m.state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    for_each_successor(m, s, sched, [&](StateId t) { preds[t].push_back(s); });
  }
  std::vector<char> reaches(n, 0);
  std::vector<StateId> stack{*bad};
  reaches[*bad] = 1;
  while (!stack.empty()) {
    StateId t = stack.back();
    stack.pop_back();
    for (StateId s : preds[t]) {
      if (!reaches[s]) {
        reaches[s] = 1;
        stack.push_back(s);
      }
    }
  }
  auto seen = forward_reach(m, sched, *bad);
  for (StateId s = 0; s < n; ++s) {
    if (seen[s] && !reaches[s]) return false;
  }
  return true;
}

template <typename V>
const std::vector<V>& reward_values(const model::RewardVector& rw) {
  if constexpr (std::is_same_v<V, double>) {
    return rw.approx;
  } else {
    return rw.exact;
  }
}

template <typename V>
struct Parts {
  V numerator{0};
  V bad{0};
};

template <typename V>
Parts<V> solve_parts(const PartialModel& m, const std::vector<V>& weights, const model::RewardVector& rw, Optimize opt,
                     const Scheduler* sched, bool with_bad, const SolverOptions& so, SolverStats& stats) {
  auto sys = snapshot(m, weights, sched);
  const auto& values = reward_values<V>(rw);
  Targets<V> rewards;
  rewards.reserve(m.term_states().size());
  for (size_t i = 0; i < m.term_states().size(); ++i) rewards.emplace_back(m.term_states()[i], values[i]);
  Parts<V> out;
  out.numerator = solve_reachability(sys, rewards, opt, so, &stats)[PartialModel::kInitial];
  if (with_bad) {
    Targets<V> bad{{*m.bad_state(), V(1)}};
    out.bad = solve_reachability(sys, bad, opt, so, &stats)[PartialModel::kInitial];
  }
  return out;
}

ConditionalResult evaluate_double(const PartialModel& m, const std::vector<double>& weights,
                                  const model::RewardVector& rw, Optimize opt, const Scheduler* sched, bool with_bad,
                                  const CheckerOptions& options);

/// Numerator, Bad probability and quotient, exactly when the model is small
/// enough and its components allow it.
ConditionalResult evaluate(PartialModel& m, const model::RewardVector& rw, Optimize opt, const Scheduler* sched,
                           bool with_bad, const CheckerOptions& options) {
  ConditionalResult r;
  if (m.state_count() <= options.exact_threshold) {
    try {
      SolverStats stats;
      auto p = solve_parts<Rational>(m, weight_values<Rational>(m), rw, opt, sched, with_bad, options.solver, stats);
      r.numerator = Quantity::of(p.numerator);
      r.bad = Quantity::of(p.bad);
      r.denominator = Quantity::of(Rational(1 - p.bad));
      if (*r.denominator.exact != 0) r.value = Quantity::of(Rational(p.numerator / *r.denominator.exact));
      r.stats = stats;
      return r;
    } catch (const NeedsApproximation&) {
      // fall through to floating point
    }
  }
  return evaluate_double(m, weight_values<double>(m), rw, opt, sched, with_bad, options);
}

ConditionalResult evaluate_double(const PartialModel& m, const std::vector<double>& weights,
                                  const model::RewardVector& rw, Optimize opt, const Scheduler* sched, bool with_bad,
                                  const CheckerOptions& options) {
  ConditionalResult r;
  auto p = solve_parts<double>(m, weights, rw, opt, sched, with_bad, options.solver, r.stats);
  r.numerator = Quantity::of(p.numerator);
  r.bad = Quantity::of(std::min(1.0, p.bad));
  if (with_bad && bad_almost_sure(m, sched)) {
    r.bad = Quantity::of(1.0);
    r.denominator = Quantity::of(0.0);
    return r;
  }
  r.denominator = Quantity::of(1.0 - r.bad.approx);
  if (r.denominator.approx > 0) r.value = Quantity::of(p.numerator / r.denominator.approx);
  return r;
}

template <typename V>
Quantity solve_quantity(const PartialModel& m, const Targets<V>& targets, Optimize opt, const SolverOptions& so,
                        const Scheduler* sched) {
  auto sys = snapshot(m, weight_values<V>(m), sched);
  if (!sched && !sys.deterministic() && opt == Optimize::None) {
    throw Error("nondeterministic model needs min or max");
  }
  return Quantity::of(solve_reachability(sys, targets, opt, so)[PartialModel::kInitial]);
}

template <typename V>
Targets<V> to_targets(std::span<const StateId> states) {
  Targets<V> out;
  for (StateId s : states) out.emplace_back(s, V(1));
  return out;
}

bool less_than(const Quantity& a, const Quantity& b) {
  if (a.exact && b.exact) return *a.exact < *b.exact;
  return a.approx < b.approx;
}

}  // namespace

std::string Quantity::str() const {
  if (exact) return exact->get_str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", approx);
  return buf;
}

Quantity reach_probability(const PartialModel& m, std::span<const StateId> targets, Optimize opt,
                           const CheckerOptions& options, const Scheduler* sched) {
  for (StateId s : targets) {
    if (s >= m.state_count()) throw Error("target state " + std::to_string(s) + " out of range");
  }
  if (m.state_count() <= options.exact_threshold) {
    try {
      return solve_quantity(m, to_targets<Rational>(targets), opt, options.solver, sched);
    } catch (const NeedsApproximation&) {
    }
  }
  return solve_quantity(m, to_targets<double>(targets), opt, options.solver, sched);
}

Quantity expected_reward_to_sink(PartialModel& m, const semantics::RewardFunction& reward, Optimize opt,
                                 const CheckerOptions& options, const Scheduler* sched) {
  const auto& rw = m.rewards(reward);
  const auto& terms = m.term_states();
  if (m.state_count() <= options.exact_threshold) {
    try {
      Targets<Rational> t;
      for (size_t i = 0; i < terms.size(); ++i) t.emplace_back(terms[i], rw.exact[i]);
      return solve_quantity(m, t, opt, options.solver, sched);
    } catch (const NeedsApproximation&) {
    }
  }
  Targets<double> t;
  for (size_t i = 0; i < terms.size(); ++i) t.emplace_back(terms[i], rw.approx[i]);
  return solve_quantity(m, t, opt, options.solver, sched);
}

bool better(const ConditionalResult& a, const ConditionalResult& b, SchedulerMode mode) {
  // Undefined sits below every number.
  if (!a.defined() || !b.defined()) {
    return mode == SchedulerMode::Min ? !a.defined() && b.defined() : a.defined() && !b.defined();
  }
  return mode == SchedulerMode::Min ? less_than(*a.value, *b.value) : less_than(*b.value, *a.value);
}

ConditionalResult conditional_value(PartialModel& m, const frontend::Property& property,
                                    const CheckerOptions& options) {
  return conditional_value(m, semantics::RewardFunction(property), property.mode, options);
}

ConditionalResult conditional_value(PartialModel& m, const semantics::RewardFunction& reward,
                                    const Scheduler& scheduler, const CheckerOptions& options) {
  const auto& rw = m.rewards(reward);
  return evaluate(m, rw, Optimize::None, &scheduler, m.bad_state().has_value(), options);
}

ConditionalResult conditional_value(PartialModel& m, const semantics::RewardFunction& reward,
                                    const std::vector<double>& weights, const CheckerOptions& options) {
  if (!model::nondet_states(m).empty()) throw Error("external weights need a deterministic model");
  return evaluate_double(m, weights, m.rewards(reward), Optimize::None, nullptr, m.bad_state().has_value(), options);
}

ConditionalResult conditional_value(PartialModel& m, const semantics::RewardFunction& reward, SchedulerMode mode,
                                    const CheckerOptions& options) {
  const auto& rw = m.rewards(reward);
  auto nondet = model::nondet_states(m);
  if (nondet.empty()) return evaluate(m, rw, Optimize::None, nullptr, m.bad_state().has_value(), options);

  auto reachable = forward_reach(m, nullptr);
  auto bad = m.bad_state();
  if (!bad || !reachable[*bad]) {
    // Without Bad the quotient is the numerator, which optimizes directly.
    return evaluate(m, rw, to_optimize(mode), nullptr, false, options);
  }

  // Quotients do not decompose, so try every memoryless scheduler on the
  // reachable nondeterministic states.
  std::vector<StateId> open;
  for (StateId s : nondet) {
    if (reachable[s]) open.push_back(s);
  }
  if (open.size() >= 63 || (uint64_t{1} << open.size()) > options.scheduler_cap) {
    throw SchedulerExplosion(std::to_string(open.size()) + " reachable nondeterministic states exceed the cap of " +
                             std::to_string(options.scheduler_cap) + " schedulers");
  }
  Scheduler sched;
  for (StateId s : nondet) sched.set(s, semantics::Action::Left);

  uint64_t total = uint64_t{1} << open.size();
  std::optional<ConditionalResult> best;
  SolverStats stats;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t i = 0; i < open.size(); ++i) {
      sched.set(open[i], (mask >> i) & 1 ? semantics::Action::Right : semantics::Action::Left);
    }
    auto r = evaluate(m, rw, Optimize::None, &sched, true, options);
    stats.sccs += r.stats.sccs;
    stats.largest_scc = std::max(stats.largest_scc, r.stats.largest_scc);
    stats.iterated_states += r.stats.iterated_states;
    stats.iterations += r.stats.iterations;
    stats.converged = stats.converged && r.stats.converged;
    if (!best || better(r, *best, mode)) {
      r.scheduler = sched;
      best = std::move(r);
    }
  }
  best->schedulers = total;
  best->stats = stats;
  return *best;
}

}  // namespace probe::checker
