#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "probe/frontend/ast.hpp"

namespace probe::frontend {

enum class QueryKind : uint8_t { Probability, Expectation };
enum class Comparison : uint8_t { Less, LessEqual, Greater, GreaterEqual };
enum class SchedulerMode : uint8_t { Min, Max };

/// Conditional query `P cmp λ [ G ]` or `E cmp κ [ f ]`, both conditioned on
/// not violating an observation.
struct Property {
  QueryKind kind = QueryKind::Probability;
  Comparison comparison = Comparison::GreaterEqual;
  parametric::Rational threshold;
  SchedulerMode mode = SchedulerMode::Min;
  BExprPtr target;     // Probability
  AExprPtr objective;  // Expectation

  /// True for `>=` and `>`, the comparisons a growing lower bound can prove.
  bool lower_bounded() const {
    return comparison == Comparison::GreaterEqual || comparison == Comparison::Greater;
  }
  /// Canonical text; parse_property(str()) yields an equal property.
  std::string str() const;
  /// Identifies the reward function: equal for properties with equal objectives.
  std::string reward_key() const;
};

/// Parses `[min|max] P|E [min|max] <cmp> <rational> [ <expr> ]`. Without an
/// explicit mode, `>=`/`>` use min and `<=`/`<` use max, so that the verdict
/// covers every scheduler. Throws SyntaxError.
Property parse_property(std::string_view text);

/// One property per non-blank line; `//` starts a comment.
std::vector<Property> parse_property_file(std::string_view text);

/// Resolves the property's variables against the program. Throws
/// ValidationError for undeclared names.
Property bind(const Property& property, const Program& program);

std::string to_string(Comparison comparison);
std::string to_string(SchedulerMode mode);

}  // namespace probe::frontend
