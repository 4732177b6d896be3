#pragma once

#include <string>

#include "probe/frontend/ast.hpp"

namespace probe::frontend {

/// Source text that parses back to a structurally equal AST.
std::string print(const Program& program);
std::string print(const Stmt& stmt, const parametric::ParameterSet& parameters, int indent = 0);
std::string print(const AExpr& expr);
std::string print(const BExpr& expr);
std::string print(CmpOp op);

}  // namespace probe::frontend
