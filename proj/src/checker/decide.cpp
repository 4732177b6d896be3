#include "probe/checker/decide.hpp"

namespace probe::checker {

using frontend::Comparison;

bool satisfies(const Quantity& value, Comparison comparison, const Rational& threshold) {
  // mpq_class converts doubles without rounding.
  int c = cmp(value.exact ? *value.exact : Rational(value.approx), threshold);
  switch (comparison) {
    case Comparison::Less:
      return c < 0;
    case Comparison::LessEqual:
      return c <= 0;
    case Comparison::Greater:
      return c > 0;
    case Comparison::GreaterEqual:
      return c >= 0;
  }
  return false;
}

Outcome decide(const frontend::Property& property, const ConditionalResult& result, bool fully_expanded) {
  if (!result.defined()) return fully_expanded ? Outcome::Undefined : Outcome::Unknown;
  bool holds = satisfies(*result.value, property.comparison, property.threshold);
  if (fully_expanded) return holds ? Outcome::Proven : Outcome::Refuted;
  if (property.lower_bounded()) return holds ? Outcome::Proven : Outcome::Unknown;
  return holds ? Outcome::Unknown : Outcome::Refuted;
}

bool final(Outcome outcome) { return outcome != Outcome::Unknown; }

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Proven:
      return "proven";
    case Outcome::Refuted:
      return "refuted";
    case Outcome::Unknown:
      return "unknown";
    case Outcome::Undefined:
      return "undefined";
  }
  return "?";
}

}  // namespace probe::checker
