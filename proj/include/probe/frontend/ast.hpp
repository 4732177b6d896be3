#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "probe/error.hpp"
#include "probe/parametric/polynomial.hpp"

namespace probe::frontend {

using VarId = uint32_t;
using StmtId = uint32_t;
inline constexpr VarId kUnresolved = UINT32_MAX;

struct AExpr;
struct BExpr;
struct Stmt;
using AExprPtr = std::shared_ptr<AExpr>;
using BExprPtr = std::shared_ptr<BExpr>;
using StmtPtr = std::shared_ptr<Stmt>;

struct AExpr {
  enum class Kind : uint8_t { Literal, Variable, Add, Sub, Mul };

  Kind kind = Kind::Literal;
  int64_t value = 0;
  std::string name;          // Variable
  VarId var = kUnresolved;   // Variable, set by validation
  AExprPtr lhs, rhs;         // Add, Sub, Mul
  SourceLocation loc;
};

enum class CmpOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

struct BExpr {
  enum class Kind : uint8_t { True, False, Cmp, And, Or, Not };

  Kind kind = Kind::True;
  CmpOp op = CmpOp::Eq;      // Cmp
  AExprPtr lhs, rhs;         // Cmp
  BExprPtr a, b;             // And, Or (a, b); Not (a)
  SourceLocation loc;
};

struct Stmt {
  enum class Kind : uint8_t { Skip, Abort, Assign, Uniform, Seq, If, Prob, Nondet, While, Observe };

  Kind kind = Kind::Skip;
  std::string name;                   // Assign, Uniform
  VarId var = kUnresolved;
  AExprPtr expr;                      // Assign
  AExprPtr lo, hi;                    // Uniform
  BExprPtr cond;                      // If, While, Observe
  StmtPtr first, second;              // Seq, If (then, else), Prob, Nondet, While (body)
  parametric::Polynomial weight;      // Prob: probability of `first`
  StmtId id = 0;                      // numbered by validation
  SourceLocation loc;
};

// Node constructors. Variables are resolved later by validate().
AExprPtr lit(int64_t value);
AExprPtr var(std::string name);
AExprPtr binary(AExpr::Kind kind, AExprPtr lhs, AExprPtr rhs);
BExprPtr truth(bool value);
BExprPtr cmp(CmpOp op, AExprPtr lhs, AExprPtr rhs);
BExprPtr conj(BExprPtr a, BExprPtr b);
BExprPtr disj(BExprPtr a, BExprPtr b);
BExprPtr negate(BExprPtr a);
StmtPtr skip();
StmtPtr abort_stmt();
StmtPtr assign(std::string name, AExprPtr expr);
StmtPtr uniform(std::string name, AExprPtr lo, AExprPtr hi);
StmtPtr seq(StmtPtr first, StmtPtr second);
StmtPtr if_stmt(BExprPtr cond, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr prob(StmtPtr left, parametric::Polynomial weight, StmtPtr right);
StmtPtr nondet(StmtPtr left, StmtPtr right);
StmtPtr while_stmt(BExprPtr cond, StmtPtr body);
StmtPtr observe(BExprPtr cond);

/// Structural equality, ignoring source locations and resolution state.
bool equal(const AExpr& a, const AExpr& b);
bool equal(const BExpr& a, const BExpr& b);
bool equal(const Stmt& a, const Stmt& b);

/// Deep copies, so that resolving names in a copy leaves the original intact.
AExprPtr clone(const AExprPtr& e);
BExprPtr clone(const BExprPtr& e);

struct Declaration {
  std::string name;
  int64_t initial = 0;
  SourceLocation loc;
};

struct Program {
  std::vector<Declaration> declarations;
  parametric::ParameterSet parameters;
  StmtPtr body;
  /// Statement table indexed by StmtId; filled by validate().
  std::vector<const Stmt*> statements;

  std::optional<VarId> variable(const std::string& name) const;
  size_t variable_count() const { return declarations.size(); }
  bool parametric() const { return !parameters.empty(); }
  /// True if a nondeterministic choice occurs anywhere in the body.
  bool has_nondeterminism() const;
  const Stmt& statement(StmtId id) const { return *statements.at(id); }
};

/// Structural equality of declarations and bodies.
bool equal(const Program& a, const Program& b);

}  // namespace probe::frontend
