#include "probe/parametric/eliminate.hpp"

#include <map>
#include <set>

namespace probe::parametric {

using model::PartialModel;
using model::StateClass;
using model::StateId;

std::optional<Rational> EliminationResult::value(const ParamValuation& u) const {
  Rational den = 1 - bad.evaluate(u);
  if (den == 0) return std::nullopt;
  return Rational(numerator.evaluate(u) / den);
}

namespace {

class Eliminator {
 public:
  explicit Eliminator(const PartialModel& m) : m_(m), out_(m.state_count()), in_(m.state_count()) {
    for (StateId s = 0; s < m.state_count(); ++s) {
      if (m.state_class(s) != StateClass::Internal) continue;
      if (m.nondeterministic(s)) throw Error("state elimination needs a deterministic model");
      for (const auto& e : m.entries(m.choices(s)[0])) add(s, e.target, m.weights().function(e.weight));
    }
  }

  /// Bypasses every internal state except the initial one.
  size_t run() {
    std::set<std::pair<uint64_t, StateId>> queue;
    for (StateId s = 0; s < m_.state_count(); ++s) {
      if (s != PartialModel::kInitial && m_.state_class(s) == StateClass::Internal) queue.emplace(cost(s), s);
    }
    size_t count = 0;
    while (!queue.empty()) {
      auto [key, s] = *queue.begin();
      queue.erase(queue.begin());
      // Costs go stale as neighbours are eliminated; refresh lazily.
      uint64_t now = cost(s);
      if (now != key) {
        queue.emplace(now, s);
        continue;
      }
      bypass(s);
      ++count;
    }
    return count;
  }

  /// Value collected from the initial state when reaching each absorbing
  /// state t earns value(t).
  template <typename F>
  RationalFunction from_initial(F&& value) const {
    const auto& edges = out_[PartialModel::kInitial];
    RationalFunction sum;
    RationalFunction self;
    for (const auto& [t, w] : edges) {
      if (t == PartialModel::kInitial) {
        self = w;
      } else {
        RationalFunction v = value(t);
        if (!v.is_zero()) sum += w * v;
      }
    }
    RationalFunction leave = RationalFunction(1) - self;
    if (leave.is_zero()) return RationalFunction();
    return sum / leave;
  }

 private:
  void add(StateId from, StateId to, const RationalFunction& w) {
    if (w.is_zero()) return;
    auto [it, fresh] = out_[from].try_emplace(to, w);
    if (!fresh) it->second += w;
    in_[to].insert(from);
  }

  uint64_t cost(StateId s) const {
    uint64_t c = 0;
    for (const auto& [t, w] : out_[s]) c += w.degree_sum();
    for (StateId p : in_[s]) {
      if (p != s) c += out_[p].at(s).degree_sum();
    }
    return c;
  }

  void bypass(StateId s) {
    RationalFunction self;
    if (auto it = out_[s].find(s); it != out_[s].end()) self = it->second;
    RationalFunction leave = RationalFunction(1) - self;
    std::map<StateId, RationalFunction> succ = std::move(out_[s]);
    out_[s].clear();
    succ.erase(s);
    for (const auto& [t, w] : succ) in_[t].erase(s);
    std::set<StateId> preds = std::move(in_[s]);
    in_[s].clear();
    preds.erase(s);

    // A certain self-loop traps everything that enters.
    bool trap = leave.is_zero();
    for (StateId p : preds) {
      RationalFunction into = out_[p].at(s);
      out_[p].erase(s);
      if (trap) continue;
      RationalFunction scaled = into / leave;
      for (const auto& [t, w] : succ) add(p, t, scaled * w);
    }
  }

  const PartialModel& m_;
  std::vector<std::map<StateId, RationalFunction>> out_;
  std::vector<std::set<StateId>> in_;
};

}  // namespace

EliminationResult eliminate(const PartialModel& m, const semantics::RewardFunction& reward) {
  EliminationResult r;
  if (m.state_class(PartialModel::kInitial) != StateClass::Internal) return r;
  Eliminator e(m);
  r.eliminated = e.run();
  auto bad = m.bad_state();
  r.numerator = e.from_initial([&](StateId t) {
    return m.state_class(t) == StateClass::Term ? RationalFunction(m.reward(t, reward)) : RationalFunction();
  });
  r.bad = e.from_initial([&](StateId t) { return bad && t == *bad ? RationalFunction(1) : RationalFunction(); });
  return r;
}

}  // namespace probe::parametric
