#include "probe/parametric/rational_function.hpp"

#include <vector>

#include "probe/error.hpp"

namespace probe::parametric {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_value() != 1) {
      num_ = num_.scaled(1 / den_.constant_value());
      den_ = Polynomial(1);
    }
    return;
  }
  if (num_.total_degree() <= kReduceDegreeCap && den_.total_degree() <= kReduceDegreeCap) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant: " + str());
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_constant() && b.is_constant()) return {a.constant_value() + b.constant_value()};
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_constant() && b.is_constant()) return {a.constant_value() * b.constant_value()};
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  if (a.is_constant() && b.is_constant()) return {a.constant_value() / b.constant_value()};
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFunction::evaluate(std::span<const Rational> values) const {
  Rational d = den_.evaluate(values);
  if (d == 0) throw IllDefinedPoint("denominator " + den_.str() + " vanishes");
  return num_.evaluate(values) / d;
}

Rational RationalFunction::evaluate(const ParamValuation& valuation) const {
  std::vector<Rational> values;
  for (uint32_t i = 0; i < valuation.size(); ++i) values.push_back(valuation.at(i));
  Rational d = den_.evaluate(values);
  if (d == 0) {
    throw IllDefinedPoint("denominator " + den_.str(valuation.parameters()) + " vanishes at " +
                          valuation.str());
  }
  return num_.evaluate(values) / d;
}

RationalFunction RationalFunction::remap(std::span<const uint32_t> mapping) const {
  return {num_.remap(mapping), den_.remap(mapping)};
}

std::string RationalFunction::str(const ParameterSet& parameters) const {
  if (den_.is_constant()) return num_.str(parameters);
  auto wrap = [&](const Polynomial& p) {
    std::string s = p.str(parameters);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace probe::parametric
