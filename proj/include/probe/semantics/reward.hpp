#pragma once

#include <string>

#include "probe/frontend/property.hpp"
#include "probe/semantics/configuration.hpp"

namespace probe::semantics {

/// Reward collected on reaching a terminated configuration: the property's
/// post-expectation, or the 0/1 indicator of its target predicate. Every
/// other configuration earns nothing.
class RewardFunction {
 public:
  /// The property must be bound to the program.
  explicit RewardFunction(const frontend::Property& property);
  static RewardFunction constant_one();

  /// Throws ModelError for a negative post-expectation.
  parametric::Rational at(const Valuation& sigma) const;
  parametric::Rational operator()(const Configuration& config) const;

  const std::string& key() const { return key_; }

 private:
  RewardFunction() = default;

  frontend::AExprPtr objective_;
  frontend::BExprPtr target_;
  std::string key_;
};

}  // namespace probe::semantics
