#include <algorithm>
#include <string>

#include "probe/checker/solver.hpp"
#include "probe/explorer/explorer.hpp"

namespace probe::explorer {

using model::PartialModel;

namespace {

constexpr uint32_t kUnvisited = UINT32_MAX;
constexpr int kComponentSweeps = 10;

/// Strongly connected components of the model graph in topological order.
std::vector<std::vector<StateId>> components(const PartialModel& m) {
  size_t n = m.state_count();
  std::vector<uint32_t> index(n, kUnvisited);
  std::vector<uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<StateId> stack;
  std::vector<std::vector<StateId>> out;

  // Successor lists flattened per state for the iterative walk.
  auto successors = [&](StateId s) {
    std::vector<StateId> next;
    for (const auto& c : m.choices(s)) {
      for (const auto& e : m.entries(c)) next.push_back(e.target);
    }
    return next;
  };
  struct Frame {
    StateId v;
    std::vector<StateId> next;
    size_t pos;
  };
  std::vector<Frame> calls;
  uint32_t counter = 0;
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    calls.push_back({root, successors(root), 0});
    while (!calls.empty()) {
      Frame& f = calls.back();
      if (f.pos < f.next.size()) {
        StateId w = f.next[f.pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, successors(w), 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      StateId v = f.v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<StateId> comp;
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        out.push_back(std::move(comp));
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> forward_mass_bound(const PartialModel& m) {
  size_t n = m.state_count();
  const auto& weights = m.weights();
  std::vector<double> inflow(n, 0.0);
  std::vector<double> mass(n, 0.0);
  std::vector<char> in_comp(n, 0);
  inflow[PartialModel::kInitial] = 1.0;

  // Probability of moving from s to t once s is left, summed over actions.
  auto leave = [&](StateId s, auto&& visit) {
    for (const auto& c : m.choices(s)) {
      double self = 0;
      for (const auto& e : m.entries(c)) {
        if (e.target == s) self += weights.approx(e.weight);
      }
      if (self >= 1) continue;
      for (const auto& e : m.entries(c)) {
        if (e.target != s) visit(e.target, weights.approx(e.weight) / (1 - self));
      }
    }
  };

  for (const auto& comp : components(m)) {
    if (comp.size() == 1) {
      mass[comp[0]] = std::min(1.0, inflow[comp[0]]);
    } else {
      // Iterating downwards from 1 never drops below the true values.
      for (StateId s : comp) {
        in_comp[s] = 1;
        mass[s] = 1.0;
      }
      for (int sweep = 0; sweep < kComponentSweeps; ++sweep) {
        std::vector<double> internal(comp.size(), 0.0);
        for (size_t i = 0; i < comp.size(); ++i) {
          StateId s = comp[i];
          double in = inflow[s];
          for (StateId u : comp) {
            if (u == s) continue;
            leave(u, [&](StateId t, double p) {
              if (t == s) in += mass[u] * p;
            });
          }
          internal[i] = std::min(1.0, in);
        }
        for (size_t i = 0; i < comp.size(); ++i) mass[comp[i]] = internal[i];
      }
    }
    for (StateId u : comp) {
      leave(u, [&](StateId t, double p) {
        if (!in_comp[t] && t != u) inflow[t] += mass[u] * p;
      });
    }
    for (StateId s : comp) in_comp[s] = 0;
  }
  return mass;
}

double path_mass_upper_bound(const PartialModel& m, StateId s) {
  if (s >= m.state_count()) throw Error("unknown state " + std::to_string(s));
  auto sys = checker::snapshot(m, checker::weight_values<double>(m));
  checker::Targets<double> target{{s, 1.0}};
  auto x = checker::solve_reachability(sys, target, checker::Optimize::Max);
  return x[PartialModel::kInitial];
}

}  // namespace probe::explorer
