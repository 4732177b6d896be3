#include "probe/frontend/validate.hpp"

#include <unordered_map>

namespace probe::frontend {

namespace {

using Scope = std::unordered_map<std::string, VarId>;

void resolve_in_place(AExpr* e, const Scope& scope) {
  if (!e) return;
  if (e->kind == AExpr::Kind::Variable) {
    auto it = scope.find(e->name);
    if (it == scope.end()) throw ValidationError(e->loc, "undeclared variable " + e->name);
    e->var = it->second;
    return;
  }
  resolve_in_place(e->lhs.get(), scope);
  resolve_in_place(e->rhs.get(), scope);
}

void resolve_in_place(BExpr* e, const Scope& scope) {
  if (!e) return;
  resolve_in_place(e->lhs.get(), scope);
  resolve_in_place(e->rhs.get(), scope);
  resolve_in_place(e->a.get(), scope);
  resolve_in_place(e->b.get(), scope);
}

class Validator {
 public:
  explicit Validator(Program& program) : program_(program) {}

  void run() {
    for (size_t i = 0; i < program_.declarations.size(); ++i) {
      const auto& d = program_.declarations[i];
      if (!scope_.emplace(d.name, static_cast<VarId>(i)).second) {
        throw ValidationError(d.loc, "duplicate declaration of " + d.name);
      }
    }
    for (const auto& p : program_.parameters.names()) {
      if (auto v = program_.variable(p)) {
        throw ValidationError(program_.declarations[*v].loc, "parameter " + p + " is also declared as a variable");
      }
    }
    if (!program_.body) program_.body = skip();
    program_.statements.clear();
    visit(program_.body.get());
  }

 private:
  void visit(Stmt* s) {
    s->id = static_cast<StmtId>(program_.statements.size());
    program_.statements.push_back(s);
    switch (s->kind) {
      case Stmt::Kind::Assign:
      case Stmt::Kind::Uniform:
        assign_target(s);
        break;
      case Stmt::Kind::Prob:
        check_weight(s);
        break;
      default:
        break;
    }
    resolve_in_place(s->expr.get(), scope_);
    resolve_in_place(s->lo.get(), scope_);
    resolve_in_place(s->hi.get(), scope_);
    resolve_in_place(s->cond.get(), scope_);
    if (s->first) visit(s->first.get());
    if (s->second) visit(s->second.get());
  }

  void assign_target(Stmt* s) {
    auto it = scope_.find(s->name);
    if (it == scope_.end()) throw ValidationError(s->loc, "undeclared variable " + s->name);
    s->var = it->second;
  }

  void check_weight(const Stmt* s) {
    if (s->weight.variable_bound() > program_.parameters.size()) {
      throw ValidationError(s->loc, "probability refers to an unknown parameter");
    }
    if (s->weight.is_constant()) {
      parametric::Rational g = s->weight.constant_value();
      if (g < 0 || g > 1) {
        throw ValidationError(s->loc, "probability " + g.get_str() + " out of range [0, 1]");
      }
    }
  }

  Program& program_;
  Scope scope_;
};

Scope scope_of(const Program& program) {
  Scope scope;
  for (size_t i = 0; i < program.declarations.size(); ++i) {
    scope.emplace(program.declarations[i].name, static_cast<VarId>(i));
  }
  return scope;
}

}  // namespace

void validate(Program& program) { Validator(program).run(); }

AExprPtr resolve(const AExprPtr& expr, const Program& program) {
  AExprPtr copy = clone(expr);
  resolve_in_place(copy.get(), scope_of(program));
  return copy;
}

BExprPtr resolve(const BExprPtr& expr, const Program& program) {
  BExprPtr copy = clone(expr);
  resolve_in_place(copy.get(), scope_of(program));
  return copy;
}

}  // namespace probe::frontend
