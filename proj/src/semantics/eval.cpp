#include "probe/semantics/eval.hpp"

#include "probe/frontend/printer.hpp"

namespace probe::semantics {

using frontend::AExpr;
using frontend::BExpr;
using frontend::CmpOp;

namespace {

[[noreturn]] void overflow(const AExpr& e) {
  throw ModelError("integer overflow evaluating " + frontend::print(e));
}

}  // namespace

Value eval(const AExpr& e, const Valuation& sigma) {
  Value r = 0;
  switch (e.kind) {
    case AExpr::Kind::Literal:
      return e.value;
    case AExpr::Kind::Variable:
      if (e.var >= sigma.size()) throw ModelError("unresolved variable " + e.name);
      return sigma[e.var];
    case AExpr::Kind::Add:
      if (__builtin_add_overflow(eval(*e.lhs, sigma), eval(*e.rhs, sigma), &r)) overflow(e);
      return r;
    case AExpr::Kind::Sub:
      if (__builtin_sub_overflow(eval(*e.lhs, sigma), eval(*e.rhs, sigma), &r)) overflow(e);
      return r;
    case AExpr::Kind::Mul:
      if (__builtin_mul_overflow(eval(*e.lhs, sigma), eval(*e.rhs, sigma), &r)) overflow(e);
      return r;
  }
  return r;
}

bool eval(const BExpr& e, const Valuation& sigma) {
  switch (e.kind) {
    case BExpr::Kind::True: return true;
    case BExpr::Kind::False: return false;
    case BExpr::Kind::Not: return !eval(*e.a, sigma);
    case BExpr::Kind::And: return eval(*e.a, sigma) && eval(*e.b, sigma);
    case BExpr::Kind::Or: return eval(*e.a, sigma) || eval(*e.b, sigma);
    case BExpr::Kind::Cmp: {
      Value l = eval(*e.lhs, sigma);
      Value r = eval(*e.rhs, sigma);
      switch (e.op) {
        case CmpOp::Eq: return l == r;
        case CmpOp::Ne: return l != r;
        case CmpOp::Lt: return l < r;
        case CmpOp::Le: return l <= r;
        case CmpOp::Gt: return l > r;
        case CmpOp::Ge: return l >= r;
      }
    }
  }
  return false;
}

Valuation initial_valuation(const frontend::Program& program) {
  Valuation sigma;
  sigma.reserve(program.declarations.size());
  for (const auto& d : program.declarations) sigma.push_back(d.initial);
  return sigma;
}

}  // namespace probe::semantics
