#include "probe/parametric/weight_table.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "probe/error.hpp"

namespace probe::parametric {

WeightTable::WeightTable(ParameterSet parameters) : parameters_(std::move(parameters)) {
  push(RationalFunction(1), "1");
}

WeightTable::WeightTable(const WeightTable& other) {
  std::shared_lock lock(other.mutex_);
  parameters_ = other.parameters_;
  entries_ = other.entries_;
  index_ = other.index_;
  parametric_count_ = other.parametric_count_;
}

WeightTable& WeightTable::operator=(const WeightTable& other) {
  if (this == &other) return *this;
  WeightTable copy(other);
  std::unique_lock lock(mutex_);
  parameters_ = std::move(copy.parameters_);
  entries_ = std::move(copy.entries_);
  index_ = std::move(copy.index_);
  parametric_count_ = copy.parametric_count_;
  return *this;
}

WeightId WeightTable::push(RationalFunction weight, std::string key) {
  Entry e;
  e.function = std::move(weight);
  if (e.function.is_constant()) {
    e.constant = true;
    e.exact = e.function.constant_value();
    e.approx = e.exact.get_d();
  } else {
    e.approx = std::numeric_limits<double>::quiet_NaN();
    ++parametric_count_;
  }
  auto id = static_cast<WeightId>(entries_.size());
  entries_.push_back(std::move(e));
  index_.try_emplace(std::move(key), id);
  return id;
}

WeightId WeightTable::intern(const RationalFunction& weight) {
  std::string key = weight.str();
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return push(weight, std::move(key));
}

size_t WeightTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

bool WeightTable::parametric() const {
  std::shared_lock lock(mutex_);
  return parametric_count_ > 0;
}

RationalFunction WeightTable::function(WeightId id) const {
  std::shared_lock lock(mutex_);
  return entries_.at(id).function;
}

bool WeightTable::is_constant(WeightId id) const {
  std::shared_lock lock(mutex_);
  return entries_.at(id).constant;
}

Rational WeightTable::exact(WeightId id) const {
  std::shared_lock lock(mutex_);
  const Entry& e = entries_.at(id);
  if (!e.constant) throw Error("weight " + e.function.str(parameters_) + " is parametric");
  return e.exact;
}

double WeightTable::approx(WeightId id) const {
  std::shared_lock lock(mutex_);
  return entries_.at(id).approx;
}

std::string WeightTable::str(WeightId id) const {
  std::shared_lock lock(mutex_);
  return entries_.at(id).function.str(parameters_);
}

std::vector<double> WeightTable::approx_values() const {
  std::shared_lock lock(mutex_);
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.approx);
  return out;
}

std::vector<Rational> WeightTable::exact_values() const {
  std::shared_lock lock(mutex_);
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.constant ? e.exact : Rational(0));
  return out;
}

WeightTable WeightTable::evaluated(const ParamValuation& valuation) const {
  std::shared_lock lock(mutex_);
  std::vector<Rational> values;
  for (uint32_t i = 0; i < valuation.size(); ++i) values.push_back(valuation.at(i));
  WeightTable out;
  out.entries_.clear();
  out.index_.clear();
  for (const auto& e : entries_) {
    Rational v = e.constant ? e.exact : e.function.evaluate(values);
    // Equal values keep distinct ids; the first one is found by intern().
    out.push(RationalFunction(v), v.get_str());
  }
  return out;
}

}  // namespace probe::parametric
