#pragma once

#include <cstdint>
#include <vector>

#include "probe/frontend/ast.hpp"

namespace probe::semantics {

using Value = int64_t;
/// Values in declaration order.
using Valuation = std::vector<Value>;

/// Exact evaluation over resolved expressions. Integer overflow raises
/// ModelError rather than wrapping.
Value eval(const frontend::AExpr& expr, const Valuation& sigma);
bool eval(const frontend::BExpr& expr, const Valuation& sigma);

Valuation initial_valuation(const frontend::Program& program);

}  // namespace probe::semantics
