#pragma once

#include <algorithm>
#include <span>
#include <string>

#include "probe/parametric/polynomial.hpp"

namespace probe::parametric {

/// Operands whose total degree exceeds this are not gcd-reduced.
inline constexpr uint32_t kReduceDegreeCap = 40;

/// Quotient of two polynomials. The denominator is never zero and is kept
/// monic; numerator and denominator are coprime whenever both stay within
/// kReduceDegreeCap.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(long constant) : num_(constant), den_(1) {}             // NOLINT
  RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero for a zero denominator.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  uint32_t variable_bound() const { return std::max(num_.variable_bound(), den_.variable_bound()); }
  /// Sum of numerator and denominator total degrees; used as an elimination cost.
  uint32_t degree_sum() const { return num_.total_degree() + den_.total_degree(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero when b is the zero function.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  /// Semantic equality (cross-multiplied), independent of reduction state.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Throws IllDefinedPoint if the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> values) const;
  Rational evaluate(const ParamValuation& valuation) const;
  RationalFunction remap(std::span<const uint32_t> mapping) const;

  std::string str(const ParameterSet& parameters) const;
  std::string str() const { return str(ParameterSet()); }

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace probe::parametric
