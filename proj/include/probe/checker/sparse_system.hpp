#pragma once

#include <span>
#include <vector>

#include "probe/model/partial_model.hpp"
#include "probe/model/scheduler.hpp"

namespace probe::checker {

using model::StateId;

/// Immutable numeric snapshot of a model in compressed-row form. Each state
/// owns a range of choices, each choice a range of (target, probability)
/// entries. V is double or mpq_class.
template <typename V>
struct SparseSystem {
  std::vector<uint32_t> state_begin{0};   // states() + 1 offsets into choices
  std::vector<uint32_t> choice_begin{0};  // choices + 1 offsets into entries
  std::vector<StateId> target;
  std::vector<V> prob;

  size_t states() const { return state_begin.size() - 1; }
  size_t choice_count(StateId s) const { return state_begin[s + 1] - state_begin[s]; }
  bool deterministic() const { return choice_begin.size() - 1 == states(); }
};

/// Snapshot of `model`. With a scheduler only the chosen action of each
/// nondeterministic state is kept; the scheduler must cover all of them.
/// `weight_values` maps weight ids to numbers (see WeightTable snapshots).
template <typename V>
SparseSystem<V> snapshot(const model::PartialModel& model, const std::vector<V>& weight_values,
                         const model::Scheduler* scheduler = nullptr);

/// Weight values of the model's table as V. Throws if a weight is parametric.
template <typename V>
std::vector<V> weight_values(const model::PartialModel& model);
template <>
std::vector<double> weight_values<double>(const model::PartialModel& model);
template <>
std::vector<parametric::Rational> weight_values<parametric::Rational>(const model::PartialModel& model);

extern template SparseSystem<double> snapshot(const model::PartialModel&, const std::vector<double>&,
                                              const model::Scheduler*);
extern template SparseSystem<parametric::Rational> snapshot(const model::PartialModel&,
                                                            const std::vector<parametric::Rational>&,
                                                            const model::Scheduler*);

}  // namespace probe::checker
