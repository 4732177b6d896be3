#include "probe/frontend/ast.hpp"

#include <algorithm>

namespace probe::frontend {

AExprPtr lit(int64_t value) {
  auto e = std::make_shared<AExpr>();
  e->kind = AExpr::Kind::Literal;
  e->value = value;
  return e;
}

AExprPtr var(std::string name) {
  auto e = std::make_shared<AExpr>();
  e->kind = AExpr::Kind::Variable;
  e->name = std::move(name);
  return e;
}

AExprPtr binary(AExpr::Kind kind, AExprPtr lhs, AExprPtr rhs) {
  auto e = std::make_shared<AExpr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

BExprPtr truth(bool value) {
  auto e = std::make_shared<BExpr>();
  e->kind = value ? BExpr::Kind::True : BExpr::Kind::False;
  return e;
}

BExprPtr cmp(CmpOp op, AExprPtr lhs, AExprPtr rhs) {
  auto e = std::make_shared<BExpr>();
  e->kind = BExpr::Kind::Cmp;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

static BExprPtr bool_node(BExpr::Kind kind, BExprPtr a, BExprPtr b) {
  auto e = std::make_shared<BExpr>();
  e->kind = kind;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

BExprPtr conj(BExprPtr a, BExprPtr b) { return bool_node(BExpr::Kind::And, std::move(a), std::move(b)); }
BExprPtr disj(BExprPtr a, BExprPtr b) { return bool_node(BExpr::Kind::Or, std::move(a), std::move(b)); }
BExprPtr negate(BExprPtr a) { return bool_node(BExpr::Kind::Not, std::move(a), nullptr); }

static StmtPtr node(Stmt::Kind kind) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  return s;
}

StmtPtr skip() { return node(Stmt::Kind::Skip); }
StmtPtr abort_stmt() { return node(Stmt::Kind::Abort); }

StmtPtr assign(std::string name, AExprPtr expr) {
  auto s = node(Stmt::Kind::Assign);
  s->name = std::move(name);
  s->expr = std::move(expr);
  return s;
}

StmtPtr uniform(std::string name, AExprPtr lo, AExprPtr hi) {
  auto s = node(Stmt::Kind::Uniform);
  s->name = std::move(name);
  s->lo = std::move(lo);
  s->hi = std::move(hi);
  return s;
}

StmtPtr seq(StmtPtr first, StmtPtr second) {
  auto s = node(Stmt::Kind::Seq);
  s->first = std::move(first);
  s->second = std::move(second);
  return s;
}

StmtPtr if_stmt(BExprPtr cond, StmtPtr then_branch, StmtPtr else_branch) {
  auto s = node(Stmt::Kind::If);
  s->cond = std::move(cond);
  s->first = std::move(then_branch);
  s->second = else_branch ? std::move(else_branch) : skip();
  return s;
}

StmtPtr prob(StmtPtr left, parametric::Polynomial weight, StmtPtr right) {
  auto s = node(Stmt::Kind::Prob);
  s->first = std::move(left);
  s->weight = std::move(weight);
  s->second = std::move(right);
  return s;
}

StmtPtr nondet(StmtPtr left, StmtPtr right) {
  auto s = node(Stmt::Kind::Nondet);
  s->first = std::move(left);
  s->second = std::move(right);
  return s;
}

StmtPtr while_stmt(BExprPtr cond, StmtPtr body) {
  auto s = node(Stmt::Kind::While);
  s->cond = std::move(cond);
  s->first = std::move(body);
  return s;
}

StmtPtr observe(BExprPtr cond) {
  auto s = node(Stmt::Kind::Observe);
  s->cond = std::move(cond);
  return s;
}

template <typename T>
static bool equal_ptr(const std::shared_ptr<T>& a, const std::shared_ptr<T>& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool equal(const AExpr& a, const AExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AExpr::Kind::Literal: return a.value == b.value;
    case AExpr::Kind::Variable: return a.name == b.name;
    default: return equal_ptr(a.lhs, b.lhs) && equal_ptr(a.rhs, b.rhs);
  }
}

bool equal(const BExpr& a, const BExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case BExpr::Kind::True:
    case BExpr::Kind::False: return true;
    case BExpr::Kind::Cmp: return a.op == b.op && equal_ptr(a.lhs, b.lhs) && equal_ptr(a.rhs, b.rhs);
    default: return equal_ptr(a.a, b.a) && equal_ptr(a.b, b.b);
  }
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.kind == Stmt::Kind::Prob && !(a.weight == b.weight)) return false;
  return equal_ptr(a.expr, b.expr) && equal_ptr(a.lo, b.lo) && equal_ptr(a.hi, b.hi) &&
         equal_ptr(a.cond, b.cond) && equal_ptr(a.first, b.first) && equal_ptr(a.second, b.second);
}

AExprPtr clone(const AExprPtr& e) {
  if (!e) return nullptr;
  auto c = std::make_shared<AExpr>(*e);
  c->lhs = clone(e->lhs);
  c->rhs = clone(e->rhs);
  return c;
}

BExprPtr clone(const BExprPtr& e) {
  if (!e) return nullptr;
  auto c = std::make_shared<BExpr>(*e);
  c->lhs = clone(e->lhs);
  c->rhs = clone(e->rhs);
  c->a = clone(e->a);
  c->b = clone(e->b);
  return c;
}

std::optional<VarId> Program::variable(const std::string& name) const {
  for (size_t i = 0; i < declarations.size(); ++i) {
    if (declarations[i].name == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

static bool contains_nondet(const Stmt* s) {
  if (!s) return false;
  if (s->kind == Stmt::Kind::Nondet) return true;
  return contains_nondet(s->first.get()) || contains_nondet(s->second.get());
}

bool Program::has_nondeterminism() const { return contains_nondet(body.get()); }

bool equal(const Program& a, const Program& b) {
  if (a.declarations.size() != b.declarations.size()) return false;
  for (size_t i = 0; i < a.declarations.size(); ++i) {
    if (a.declarations[i].name != b.declarations[i].name ||
        a.declarations[i].initial != b.declarations[i].initial) {
      return false;
    }
  }
  return a.parameters == b.parameters && equal_ptr(a.body, b.body);
}

}  // namespace probe::frontend
