#include "probe/checker/solver.hpp"

#include <algorithm>
#include <cmath>

namespace probe::checker {

using parametric::Rational;

namespace {

constexpr uint32_t kUnvisited = UINT32_MAX;

template <typename V>
bool is_zero(const V& v) {
  return v == 0;
}

template <typename V>
V magnitude(const V& v) {
  if constexpr (std::is_same_v<V, double>) {
    return std::fabs(v);
  } else {
    return abs(v);
  }
}

template <typename V>
class ComponentSolver {
 public:
  ComponentSolver(const SparseSystem<V>& sys, const Targets<V>& targets, Optimize opt, const SolverOptions& options,
                  SolverStats& stats)
      : sys_(sys), opt_(opt), options_(options), stats_(stats), n_(sys.states()) {
    x_.assign(n_, V(0));
    is_target_.assign(n_, 0);
    for (const auto& [s, v] : targets) {
      if (s >= n_) throw Error("target state out of range");
      is_target_[s] = 1;
      x_[s] = v;
    }
  }

  std::vector<V> run() {
    // Iterative Tarjan. Components are emitted successors-first, so each
    // one can be solved as soon as it is complete.
    std::vector<uint32_t> index(n_, kUnvisited);
    std::vector<uint32_t> low(n_, 0);
    std::vector<char> on_stack(n_, 0);
    std::vector<StateId> stack;
    struct Frame {
      StateId v;
      uint32_t edge;
    };
    std::vector<Frame> calls;
    uint32_t counter = 0;
    in_component_.assign(n_, 0);

    for (StateId root = 0; root < n_; ++root) {
      if (index[root] != kUnvisited) continue;
      calls.push_back({root, edges_begin(root)});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!calls.empty()) {
        Frame& f = calls.back();
        StateId v = f.v;
        if (f.edge < edges_end(v)) {
          StateId w = sys_.target[f.edge++];
          if (index[w] == kUnvisited) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            calls.push_back({w, edges_begin(w)});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        calls.pop_back();
        if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
        if (low[v] == index[v]) {
          component_.clear();
          StateId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            component_.push_back(w);
          } while (w != v);
          solve_component();
        }
      }
    }
    return std::move(x_);
  }

 private:
  // Targets keep their fixed value, so their outgoing edges are ignored.
  uint32_t edges_begin(StateId s) const { return sys_.choice_begin[sys_.state_begin[s]]; }
  uint32_t edges_end(StateId s) const {
    return is_target_[s] ? edges_begin(s) : sys_.choice_begin[sys_.state_begin[s + 1]];
  }

  V better(const V& a, const V& b) const { return opt_ == Optimize::Min ? std::min(a, b) : std::max(a, b); }

  void solve_component() {
    ++stats_.sccs;
    stats_.largest_scc = std::max(stats_.largest_scc, component_.size());
    if (component_.size() == 1) {
      solve_single(component_[0]);
      return;
    }
    for (StateId s : component_) in_component_[s] = 1;
    bool branching = false;
    for (StateId s : component_) branching |= sys_.choice_count(s) > 1;
    if (branching && opt_ == Optimize::None) throw Error("nondeterministic system solved without min/max");

    if (!branching && component_.size() <= dense_limit()) {
      eliminate();
    } else if constexpr (std::is_same_v<V, double>) {
      iterate();
    } else {
      for (StateId s : component_) in_component_[s] = 0;
      throw NeedsApproximation("component of " + std::to_string(component_.size()) +
                               " states needs approximate solving");
    }
    for (StateId s : component_) in_component_[s] = 0;
  }

  size_t dense_limit() const {
    return std::is_same_v<V, double> ? options_.dense_limit : options_.exact_scc_limit;
  }

  void solve_single(StateId s) {
    if (is_target_[s]) return;
    if (opt_ == Optimize::None && sys_.choice_count(s) > 1) {
      throw Error("nondeterministic system solved without min/max");
    }
    bool first = true;
    V best(0);
    for (uint32_t c = sys_.state_begin[s]; c < sys_.state_begin[s + 1]; ++c) {
      V self(0);
      V rest(0);
      for (uint32_t e = sys_.choice_begin[c]; e < sys_.choice_begin[c + 1]; ++e) {
        if (sys_.target[e] == s) {
          self += sys_.prob[e];
        } else if (!is_zero(x_[sys_.target[e]])) {
          rest += sys_.prob[e] * x_[sys_.target[e]];
        }
      }
      // A certain self-loop traps all mass, which then never earns anything.
      V value = self >= 1 ? V(0) : V(rest / (1 - self));
      best = first ? value : better(best, value);
      first = false;
    }
    x_[s] = best;
  }

  void eliminate() {
    size_t k = component_.size();
    for (size_t i = 0; i < k; ++i) local_index_[component_[i]] = static_cast<uint32_t>(i);

    std::vector<V> a(k * k, V(0));
    std::vector<V> b(k, V(0));
    bool any_input = false;
    for (size_t i = 0; i < k; ++i) {
      StateId s = component_[i];
      a[i * k + i] = 1;
      uint32_t c = sys_.state_begin[s];
      for (uint32_t e = sys_.choice_begin[c]; e < sys_.choice_begin[c + 1]; ++e) {
        StateId t = sys_.target[e];
        if (in_component_[t]) {
          a[i * k + local_index_[t]] -= sys_.prob[e];
        } else if (!is_zero(x_[t])) {
          b[i] += sys_.prob[e] * x_[t];
          any_input = true;
        }
      }
    }
    // Without any value flowing in, the least solution is zero.
    if (!any_input) {
      for (StateId s : component_) x_[s] = 0;
      return;
    }

    for (size_t col = 0; col < k; ++col) {
      size_t pivot = col;
      if constexpr (std::is_same_v<V, double>) {
        for (size_t r = col + 1; r < k; ++r) {
          if (magnitude(a[r * k + col]) > magnitude(a[pivot * k + col])) pivot = r;
        }
      } else {
        while (pivot < k && is_zero(a[pivot * k + col])) ++pivot;
      }
      if (pivot == k || is_zero(a[pivot * k + col])) throw Error("singular component system");
      if (pivot != col) {
        for (size_t j = 0; j < k; ++j) std::swap(a[col * k + j], a[pivot * k + j]);
        std::swap(b[col], b[pivot]);
      }
      V inv = V(1) / a[col * k + col];
      for (size_t r = col + 1; r < k; ++r) {
        if (is_zero(a[r * k + col])) continue;
        V factor = a[r * k + col] * inv;
        for (size_t j = col; j < k; ++j) {
          if (!is_zero(a[col * k + j])) a[r * k + j] -= factor * a[col * k + j];
        }
        b[r] -= factor * b[col];
      }
    }
    std::vector<V> sol(k, V(0));
    for (size_t i = k; i-- > 0;) {
      V acc = b[i];
      for (size_t j = i + 1; j < k; ++j) {
        if (!is_zero(a[i * k + j])) acc -= a[i * k + j] * sol[j];
      }
      sol[i] = acc / a[i * k + i];
      if constexpr (std::is_same_v<V, double>) {
        if (sol[i] < 0) sol[i] = 0;  // rounding noise
      }
    }
    for (size_t i = 0; i < k; ++i) x_[component_[i]] = sol[i];
  }

  void iterate() {
    stats_.iterated_states += component_.size();
    for (StateId s : component_) x_[s] = 0;
    while (true) {
      if (stats_.iterations >= options_.max_iterations) {
        stats_.converged = false;
        return;
      }
      ++stats_.iterations;
      V delta(0);
      for (StateId s : component_) {
        bool first = true;
        V best(0);
        for (uint32_t c = sys_.state_begin[s]; c < sys_.state_begin[s + 1]; ++c) {
          V sum(0);
          for (uint32_t e = sys_.choice_begin[c]; e < sys_.choice_begin[c + 1]; ++e) {
            sum += sys_.prob[e] * x_[sys_.target[e]];
          }
          best = first ? sum : better(best, sum);
          first = false;
        }
        delta = std::max(delta, V(magnitude(V(best - x_[s]))));
        x_[s] = best;
      }
      if (delta < options_.epsilon) return;
    }
  }

  const SparseSystem<V>& sys_;
  Optimize opt_;
  const SolverOptions& options_;
  SolverStats& stats_;
  size_t n_;
  std::vector<V> x_;
  std::vector<char> is_target_;
  std::vector<char> in_component_;
  std::vector<uint32_t> local_index_ = std::vector<uint32_t>(n_, 0);
  std::vector<StateId> component_;
};

}  // namespace

template <typename V>
std::vector<V> solve_reachability(const SparseSystem<V>& sys, const Targets<V>& targets, Optimize opt,
                                  const SolverOptions& options, SolverStats* stats) {
  SolverStats local;
  ComponentSolver<V> solver(sys, targets, opt, options, stats ? *stats : local);
  return solver.run();
}

std::vector<double> value_iteration(const SparseSystem<double>& sys, const Targets<double>& targets, Optimize opt,
                                    double epsilon, uint64_t max_iterations,
                                    const std::function<void(uint64_t, const std::vector<double>&)>& observer) {
  size_t n = sys.states();
  std::vector<double> x(n, 0.0);
  std::vector<char> fixed(n, 0);
  for (const auto& [s, v] : targets) {
    x[s] = v;
    fixed[s] = 1;
  }
  std::vector<double> next = x;
  for (uint64_t it = 1; it <= max_iterations; ++it) {
    double delta = 0;
    for (StateId s = 0; s < n; ++s) {
      if (fixed[s]) continue;
      double best = 0;
      bool first = true;
      for (uint32_t c = sys.state_begin[s]; c < sys.state_begin[s + 1]; ++c) {
        double sum = 0;
        for (uint32_t e = sys.choice_begin[c]; e < sys.choice_begin[c + 1]; ++e) sum += sys.prob[e] * x[sys.target[e]];
        best = first ? sum : (opt == Optimize::Min ? std::min(best, sum) : std::max(best, sum));
        first = false;
      }
      delta = std::max(delta, std::fabs(best - x[s]));
      next[s] = best;
    }
    x.swap(next);
    if (observer) observer(it, x);
    if (delta < epsilon) break;
  }
  return x;
}

template std::vector<double> solve_reachability(const SparseSystem<double>&, const Targets<double>&, Optimize,
                                                const SolverOptions&, SolverStats*);
template std::vector<Rational> solve_reachability(const SparseSystem<Rational>&, const Targets<Rational>&, Optimize,
                                                  const SolverOptions&, SolverStats*);

}  // namespace probe::checker
