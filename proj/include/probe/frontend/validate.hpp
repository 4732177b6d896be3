#pragma once

#include "probe/frontend/ast.hpp"

namespace probe::frontend {

/// Checks the static program invariants, resolves variable names to ids and
/// numbers the statements. Throws ValidationError at the offending location:
/// duplicate or undeclared variables, parameters named like variables, and
/// parameter-free probabilities outside [0, 1].
void validate(Program& program);

/// Resolves the variables of a standalone expression against a program.
/// Returns fresh trees; the inputs are left untouched.
AExprPtr resolve(const AExprPtr& expr, const Program& program);
BExprPtr resolve(const BExprPtr& expr, const Program& program);

}  // namespace probe::frontend
