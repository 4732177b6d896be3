#include "probe/semantics/semantics.hpp"

namespace probe::semantics {

using frontend::Stmt;
using parametric::RationalFunction;
using parametric::WeightTable;

namespace {

// Above this many outcomes a unif statement is treated as a modelling error.
constexpr uint64_t kMaxUniformRange = 1u << 24;

Configuration finish(std::vector<frontend::StmtId> rest, Valuation sigma) {
  if (rest.empty()) return Configuration::term(std::move(sigma));
  return Configuration::run(std::move(rest), std::move(sigma));
}

StepResult deterministic(Configuration target) {
  StepResult r(1);
  r[0].successors.push_back({WeightTable::kOne, std::move(target)});
  return r;
}

}  // namespace

Semantics::Semantics(std::shared_ptr<const frontend::Program> program,
                     std::shared_ptr<parametric::WeightTable> weights)
    : program_(std::move(program)), weights_(std::move(weights)) {
  if (!weights_) weights_ = std::make_shared<WeightTable>(program_->parameters);
  choice_weights_.resize(program_->statements.size());
  for (const Stmt* s : program_->statements) {
    if (s->kind != Stmt::Kind::Prob) continue;
    RationalFunction g(s->weight);
    RationalFunction h = RationalFunction(1) - g;
    choice_weights_[s->id] = {weights_->intern(g), weights_->intern(h), g.is_zero(), h.is_zero()};
  }
}

WeightId Semantics::uniform_weight(uint64_t n) const {
  std::lock_guard lock(uniform_mutex_);
  auto [it, fresh] = uniform_weights_.try_emplace(n, WeightTable::kOne);
  if (fresh) it->second = weights_->intern(RationalFunction(parametric::Rational(1, n)));
  return it->second;
}

StepResult Semantics::step(const Configuration& c) const {
  switch (c.kind) {
    case ConfigKind::Term:
    case ConfigKind::Bad:
    case ConfigKind::Sink:
      return deterministic(Configuration::sink());
    case ConfigKind::Run:
      break;
  }
  if (c.frames.empty()) throw ModelError("run configuration without continuation");

  const Stmt& s = program_->statement(c.frames.back());
  std::vector<frontend::StmtId> rest(c.frames.begin(), c.frames.end() - 1);
  const Valuation& sigma = c.valuation;

  switch (s.kind) {
    case Stmt::Kind::Skip:
      return deterministic(finish(std::move(rest), sigma));

    case Stmt::Kind::Abort:
      return deterministic(c);

    case Stmt::Kind::Assign: {
      Valuation next = sigma;
      next[s.var] = eval(*s.expr, sigma);
      return deterministic(finish(std::move(rest), std::move(next)));
    }

    case Stmt::Kind::Uniform: {
      Value lo = eval(*s.lo, sigma);
      Value hi = eval(*s.hi, sigma);
      if (lo > hi) {
        throw ModelError("empty range in " + s.name + " := unif(" + std::to_string(lo) + ", " +
                         std::to_string(hi) + ")");
      }
      uint64_t n = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
      if (n == 0 || n > kMaxUniformRange) throw ModelError("unif range too large in assignment to " + s.name);
      WeightId w = uniform_weight(n);
      StepResult r(1);
      r[0].successors.reserve(n);
      for (Value v = lo;; ++v) {
        Valuation next = sigma;
        next[s.var] = v;
        r[0].successors.push_back({w, finish(rest, std::move(next))});
        if (v == hi) break;
      }
      return r;
    }

    case Stmt::Kind::Observe:
      if (eval(*s.cond, sigma)) return deterministic(finish(std::move(rest), sigma));
      return deterministic(Configuration::bad());

    case Stmt::Kind::If: {
      push_frames(rest, eval(*s.cond, sigma) ? *s.first : *s.second);
      return deterministic(Configuration::run(std::move(rest), sigma));
    }

    case Stmt::Kind::While: {
      if (!eval(*s.cond, sigma)) return deterministic(finish(std::move(rest), sigma));
      rest.push_back(s.id);
      push_frames(rest, *s.first);
      return deterministic(Configuration::run(std::move(rest), sigma));
    }

    case Stmt::Kind::Prob: {
      const ChoiceWeights& w = choice_weights_[s.id];
      std::vector<frontend::StmtId> left = rest;
      push_frames(left, *s.first);
      push_frames(rest, *s.second);
      Configuration cl = Configuration::run(std::move(left), sigma);
      Configuration cr = Configuration::run(std::move(rest), sigma);
      // Zero-probability branches are dropped; equal targets are merged.
      if (w.left_zero) return deterministic(std::move(cr));
      if (w.right_zero || cl == cr) return deterministic(std::move(cl));
      StepResult r(1);
      r[0].successors.push_back({w.left, std::move(cl)});
      r[0].successors.push_back({w.right, std::move(cr)});
      return r;
    }

    case Stmt::Kind::Nondet: {
      std::vector<frontend::StmtId> left = rest;
      push_frames(left, *s.first);
      push_frames(rest, *s.second);
      StepResult r(2);
      r[0].action = Action::Left;
      r[0].successors.push_back({WeightTable::kOne, Configuration::run(std::move(left), sigma)});
      r[1].action = Action::Right;
      r[1].successors.push_back({WeightTable::kOne, Configuration::run(std::move(rest), sigma)});
      return r;
    }

    case Stmt::Kind::Seq:
      break;
  }
  throw ModelError("sequence on top of the continuation");
}

std::string to_string(Action action) {
  switch (action) {
    case Action::None: return "none";
    case Action::Left: return "left";
    case Action::Right: return "right";
  }
  return "?";
}

}  // namespace probe::semantics
