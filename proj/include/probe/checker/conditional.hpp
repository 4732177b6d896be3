#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "probe/checker/solver.hpp"
#include "probe/frontend/property.hpp"
#include "probe/model/partial_model.hpp"
#include "probe/model/scheduler.hpp"
#include "probe/semantics/reward.hpp"

namespace probe::checker {

using parametric::Rational;

struct CheckerOptions {
  /// Models up to this many states are solved with exact rationals first.
  size_t exact_threshold = 50'000;
  /// Largest number of memoryless schedulers enumerated for a quotient.
  uint64_t scheduler_cap = uint64_t{1} << 20;
  SolverOptions solver;
};

/// A number that always has a floating-point value and, when it was
/// computed exactly, the exact rational as well.
struct Quantity {
  double approx = 0.0;
  std::optional<Rational> exact;

  static Quantity of(const Rational& q) { return {q.get_d(), q}; }
  static Quantity of(double d) { return {d, std::nullopt}; }
  /// Exact rational when present, otherwise the float value.
  std::string str() const;
};

/// ER(<>sink) / (1 - Pr(<>bad)) on a partial model, with both parts kept.
struct ConditionalResult {
  Quantity numerator;    // expected reward collected on reaching the sink
  Quantity bad;          // probability of violating an observation
  Quantity denominator;  // 1 - bad
  /// Empty when the denominator is 0 (Undefined).
  std::optional<Quantity> value;
  /// Optimal scheduler, when it was found by enumeration.
  std::optional<model::Scheduler> scheduler;
  /// Schedulers evaluated (1 for deterministic models).
  uint64_t schedulers = 1;
  SolverStats stats;

  bool defined() const { return value.has_value(); }
  bool exact() const { return numerator.exact.has_value() && denominator.exact.has_value(); }
};

/// Probability of eventually reaching one of `targets`. With a scheduler
/// only its actions are considered; otherwise `opt` resolves
/// nondeterminism. The model must be parameter-free.
Quantity reach_probability(const model::PartialModel& model, std::span<const model::StateId> targets, Optimize opt,
                           const CheckerOptions& options = {}, const model::Scheduler* scheduler = nullptr);

/// Expected reward collected on terminated states before reaching the sink.
/// Mass trapped in expandable states or abort loops earns nothing.
Quantity expected_reward_to_sink(model::PartialModel& model, const semantics::RewardFunction& reward, Optimize opt,
                                 const CheckerOptions& options = {}, const model::Scheduler* scheduler = nullptr);

/// The conditional value of the property on the current partial model,
/// optimized over schedulers in the property's mode. Undefined counts as
/// the least value in both modes. Throws SchedulerExplosion if exhaustive
/// scheduler enumeration would exceed the cap.
ConditionalResult conditional_value(model::PartialModel& model, const frontend::Property& property,
                                    const CheckerOptions& options = {});
ConditionalResult conditional_value(model::PartialModel& model, const semantics::RewardFunction& reward,
                                    frontend::SchedulerMode mode, const CheckerOptions& options = {});

/// Same, for the chain induced by a fixed scheduler.
ConditionalResult conditional_value(model::PartialModel& model, const semantics::RewardFunction& reward,
                                    const model::Scheduler& scheduler, const CheckerOptions& options = {});

/// Deterministic model with the weight values supplied by the caller
/// (indexed by weight id), e.g. one valuation of a parametric model.
/// Floating point only.
ConditionalResult conditional_value(model::PartialModel& model, const semantics::RewardFunction& reward,
                                    const std::vector<double>& weight_values, const CheckerOptions& options = {});

/// True if `a` is strictly better than `b` in the given mode, with
/// Undefined below every number.
bool better(const ConditionalResult& a, const ConditionalResult& b, frontend::SchedulerMode mode);

}  // namespace probe::checker
