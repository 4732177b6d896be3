#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "probe/checker/sparse_system.hpp"

namespace probe::checker {

enum class Optimize : uint8_t { None, Min, Max };

struct SolverOptions {
  /// Largest chain SCC solved by dense elimination in floating point.
  size_t dense_limit = 512;
  /// Largest SCC solved with exact rationals.
  size_t exact_scc_limit = 200;
  /// Value iteration stops once no value moves by more than this.
  double epsilon = 1e-10;
  uint64_t max_iterations = 10'000'000;
};

struct SolverStats {
  size_t sccs = 0;
  size_t largest_scc = 0;
  size_t iterated_states = 0;  // states whose value came from iteration
  uint64_t iterations = 0;
  bool converged = true;
};

/// Raised by exact solving when a component needs iteration.
class NeedsApproximation : public Error {
 public:
  using Error::Error;
};

template <typename V>
using Targets = std::vector<std::pair<StateId, V>>;

/// Least solution of x_t = v_t for targets t and x_s = opt_a sum_u P(s,a,u) x_u
/// elsewhere. This is the expected target value collected on reaching the
/// target set (probabilities when all v_t = 1); mass that never reaches a
/// target contributes 0. Components are solved in reverse topological order:
/// single states in closed form, small chain components by elimination, the
/// rest by Gauss-Seidel iteration from below (double only; the exact
/// instantiation throws NeedsApproximation instead).
template <typename V>
std::vector<V> solve_reachability(const SparseSystem<V>& sys, const Targets<V>& targets, Optimize opt,
                                  const SolverOptions& options = {}, SolverStats* stats = nullptr);

/// Plain Jacobi value iteration from 0 over the whole system. The observer
/// sees every iterate; each is a lower bound on the least solution.
std::vector<double> value_iteration(const SparseSystem<double>& sys, const Targets<double>& targets, Optimize opt,
                                    double epsilon, uint64_t max_iterations,
                                    const std::function<void(uint64_t, const std::vector<double>&)>& observer = {});

extern template std::vector<double> solve_reachability(const SparseSystem<double>&, const Targets<double>&,
                                                       Optimize, const SolverOptions&, SolverStats*);
extern template std::vector<parametric::Rational> solve_reachability(const SparseSystem<parametric::Rational>&,
                                                                     const Targets<parametric::Rational>&,
                                                                     Optimize, const SolverOptions&,
                                                                     SolverStats*);

}  // namespace probe::checker
