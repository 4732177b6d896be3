#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace probe::parametric {

using Rational = mpq_class;

/// Parses "3", "-7/2", "0.091" or "3.4e-3" into an exact rational.
/// Returns nullopt for anything else.
std::optional<Rational> parse_rational(const std::string& text);

/// Shortest exact rendering: "3", "-7/2".
std::string to_string(const Rational& value);

/// Ordered set of parameter names. A parameter is referred to by its index.
class ParameterSet {
 public:
  ParameterSet() = default;
  explicit ParameterSet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(uint32_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<uint32_t> index_of(const std::string& name) const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Total assignment of rationals to the parameters of a ParameterSet.
class ParamValuation {
 public:
  ParamValuation() = default;
  ParamValuation(ParameterSet parameters, std::vector<Rational> values);

  /// Builds a valuation from named values; every parameter must be present.
  static ParamValuation from_names(const ParameterSet& parameters,
                                   const std::map<std::string, Rational>& values);

  const ParameterSet& parameters() const { return parameters_; }
  size_t size() const { return values_.size(); }
  const Rational& at(uint32_t index) const;
  std::string str() const;

 private:
  ParameterSet parameters_;
  std::vector<Rational> values_;
};

/// Product of parameter powers, stored as (index, exponent) pairs sorted by index.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(uint32_t index, uint32_t exponent = 1);

  bool is_one() const { return factors_.empty(); }
  uint32_t exponent(uint32_t index) const;
  uint32_t total_degree() const;
  const std::vector<std::pair<uint32_t, uint32_t>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  /// Quotient when `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;
  /// This monomial with the given variable's exponent replaced.
  Monomial with_exponent(uint32_t index, uint32_t exponent) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<uint32_t, uint32_t>> factors_;
};

/// Lexicographic order with parameter 0 most significant.
struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored, so the zero polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, LexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit lift of constants
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  static Polynomial variable(uint32_t index);
  static Polynomial term(const Monomial& monomial, const Rational& coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws for non-constant ones.
  Rational constant_value() const;
  const Terms& terms() const { return terms_; }

  uint32_t total_degree() const;
  uint32_t degree_in(uint32_t index) const;
  bool contains(uint32_t index) const { return degree_in(index) > 0; }
  /// Smallest parameter index occurring, if any.
  std::optional<uint32_t> min_variable() const;
  /// Largest parameter index occurring plus one (0 for constants).
  uint32_t variable_bound() const;

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(uint32_t exponent) const;

  /// Substitutes every parameter; throws probe::Error if one is missing.
  Rational evaluate(const ParamValuation& valuation) const;
  Rational evaluate(std::span<const Rational> values) const;
  /// Renames parameter i to mapping[i].
  Polynomial remap(std::span<const uint32_t> mapping) const;

  /// Coefficients when viewed as a univariate polynomial in `index`.
  std::map<uint32_t, Polynomial> coefficients_in(uint32_t index) const;
  static Polynomial from_coefficients(const std::map<uint32_t, Polynomial>& coefficients,
                                      uint32_t index);

  /// Renders with parameter names, constant term first: "1 - f", "91/1000", "b*f^2".
  std::string str(const ParameterSet& parameters) const;
  /// Renders with generic names p0, p1, ...
  std::string str() const;

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  Terms terms_;
};

/// Exact quotient a / b; throws probe::Error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Scales p so its leading coefficient is 1 (zero stays zero).
Polynomial monic(const Polynomial& p);

}  // namespace probe::parametric
