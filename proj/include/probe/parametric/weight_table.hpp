#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "probe/parametric/rational_function.hpp"

namespace probe::parametric {

using WeightId = uint32_t;

/// Interned transition weights. Models refer to weights by id so that a
/// million-state model stores four bytes per edge weight. Id 0 is always 1.
/// intern() may be called concurrently with lookups.
class WeightTable {
 public:
  static constexpr WeightId kOne = 0;

  explicit WeightTable(ParameterSet parameters = {});
  WeightTable(const WeightTable& other);
  WeightTable& operator=(const WeightTable& other);

  WeightId intern(const RationalFunction& weight);

  const ParameterSet& parameters() const { return parameters_; }
  size_t size() const;
  /// True if some interned weight mentions a parameter.
  bool parametric() const;

  RationalFunction function(WeightId id) const;
  bool is_constant(WeightId id) const;
  /// Exact value of a parameter-free weight; throws for parametric ones.
  Rational exact(WeightId id) const;
  double approx(WeightId id) const;
  std::string str(WeightId id) const;

  /// Snapshots of all constant values (parametric entries hold NaN / 0).
  std::vector<double> approx_values() const;
  std::vector<Rational> exact_values() const;

  /// The same table with every weight evaluated at `valuation`. Ids are
  /// preserved. Throws IllDefinedPoint if a denominator vanishes.
  WeightTable evaluated(const ParamValuation& valuation) const;

 private:
  struct Entry {
    RationalFunction function;
    bool constant = false;
    Rational exact;
    double approx = 0.0;
  };

  WeightId push(RationalFunction weight, std::string key);

  ParameterSet parameters_;
  mutable std::shared_mutex mutex_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, WeightId> index_;
  size_t parametric_count_ = 0;
};

}  // namespace probe::parametric
