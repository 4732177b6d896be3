#include "probe/parametric/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "probe/error.hpp"

namespace probe::parametric {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) return std::nullopt;

  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    result = Rational(mpz_class(num, 10), d);
    result.canonicalize();
  } else {
    std::string mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mantissa = s.substr(0, e);
      std::string exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
        exp_negative = exp[0] == '-';
        exp.erase(0, 1);
      }
      if (!all_digits(exp) || exp.size() > 6) return std::nullopt;
      exponent = std::stol(exp) * (exp_negative ? -1 : 1);
    }
    std::string int_part = mantissa;
    std::string frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;
    mpz_class digits(int_part + frac_part == "" ? "0" : int_part + frac_part, 10);
    result = Rational(digits) * pow10(exponent - static_cast<long>(frac_part.size()));
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------------------

ParameterSet::ParameterSet(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<uint32_t> ParameterSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<uint32_t>(it - names_.begin());
}

ParamValuation::ParamValuation(ParameterSet parameters, std::vector<Rational> values)
    : parameters_(std::move(parameters)), values_(std::move(values)) {
  if (values_.size() != parameters_.size()) {
    throw Error("parameter valuation must assign every parameter");
  }
  // Evaluation relies on canonical inputs; mpq comparison does not normalize.
  for (auto& v : values_) v.canonicalize();
}

ParamValuation ParamValuation::from_names(const ParameterSet& parameters,
                                          const std::map<std::string, Rational>& values) {
  std::vector<Rational> ordered;
  for (const auto& name : parameters.names()) {
    auto it = values.find(name);
    if (it == values.end()) throw Error("no value for parameter " + name);
    ordered.push_back(it->second);
  }
  return ParamValuation(parameters, std::move(ordered));
}

const Rational& ParamValuation::at(uint32_t index) const {
  if (index >= values_.size()) throw Error("missing value for parameter #" + std::to_string(index));
  return values_[index];
}

std::string ParamValuation::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ", ";
    out << parameters_.name(static_cast<uint32_t>(i)) << "=" << values_[i].get_str();
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Monomial Monomial::variable(uint32_t index, uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(index, exponent);
  return m;
}

uint32_t Monomial::exponent(uint32_t index) const {
  for (const auto& [var, exp] : factors_) {
    if (var == index) return exp;
    if (var > index) break;
  }
  return 0;
}

uint32_t Monomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = divisor.factors_.begin();
  while (b != divisor.factors_.end()) {
    if (a == factors_.end() || a->first > b->first) return std::nullopt;
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
      continue;
    }
    if (a->second < b->second) return std::nullopt;
    if (a->second > b->second) r.factors_.emplace_back(a->first, a->second - b->second);
    ++a;
    ++b;
  }
  while (a != factors_.end()) r.factors_.push_back(*a++);
  return r;
}

Monomial Monomial::with_exponent(uint32_t index, uint32_t exponent) const {
  Monomial r;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && f.first >= index) {
      if (exponent > 0) r.factors_.emplace_back(index, exponent);
      placed = true;
      if (f.first == index) continue;
    }
    r.factors_.push_back(f);
  }
  if (!placed && exponent > 0) r.factors_.emplace_back(index, exponent);
  return r;
}

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The side carrying the smaller (more significant) index is larger.
      return fa[i].first > fb[i].first;
    }
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) {
    auto& c = terms_.emplace(Monomial(), constant).first->second;
    c.canonicalize();
  }
}

Polynomial Polynomial::variable(uint32_t index) { return term(Monomial::variable(index), 1); }

Polynomial Polynomial::term(const Monomial& monomial, const Rational& coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(monomial, coefficient).first->second.canonicalize();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

uint32_t Polynomial::degree_in(uint32_t index) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
  return d;
}

std::optional<uint32_t> Polynomial::min_variable() const {
  std::optional<uint32_t> best;
  for (const auto& [m, c] : terms_) {
    if (!m.is_one() && (!best || m.factors().front().first < *best)) best = m.factors().front().first;
  }
  return best;
}

uint32_t Polynomial::variable_bound() const {
  uint32_t bound = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.is_one()) bound = std::max(bound, m.factors().back().first + 1);
  }
  return bound;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c *= factor;
  return r;
}

Polynomial Polynomial::pow(uint32_t exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [var, exp] : m.factors()) {
      if (var >= values.size()) throw Error("missing value for parameter #" + std::to_string(var));
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), values[var].get_num_mpz_t(), exp);
      mpz_pow_ui(p.get_den_mpz_t(), values[var].get_den_mpz_t(), exp);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

Rational Polynomial::evaluate(const ParamValuation& valuation) const {
  std::vector<Rational> values;
  values.reserve(valuation.size());
  for (uint32_t i = 0; i < valuation.size(); ++i) values.push_back(valuation.at(i));
  return evaluate(values);
}

Polynomial Polynomial::remap(std::span<const uint32_t> mapping) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (const auto& [var, exp] : m.factors()) mm = mm * Monomial::variable(mapping[var], exp);
    r.add_term(mm, c);
  }
  return r;
}

std::map<uint32_t, Polynomial> Polynomial::coefficients_in(uint32_t index) const {
  std::map<uint32_t, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    out[m.exponent(index)].add_term(m.with_exponent(index, 0), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(const std::map<uint32_t, Polynomial>& coefficients,
                                         uint32_t index) {
  Polynomial r;
  for (const auto& [deg, coeff] : coefficients) {
    for (const auto& [m, c] : coeff.terms_) r.add_term(m * Monomial::variable(index, deg), c);
  }
  return r;
}

std::string Polynomial::str(const ParameterSet& parameters) const {
  if (terms_.empty()) return "0";
  auto name = [&](uint32_t index) {
    return index < parameters.size() ? parameters.name(index) : "p" + std::to_string(index);
  };
  // Constant term first, then increasing lexicographic order.
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (m.is_one() || magnitude != 1) {
      out << magnitude.get_str();
      printed = true;
    }
    for (const auto& [var, exp] : m.factors()) {
      if (printed) out << "*";
      out << name(var);
      if (exp > 1) out << "^" << exp;
      printed = true;
    }
  }
  return out.str();
}

std::string Polynomial::str() const { return str(ParameterSet()); }

// ---------------------------------------------------------------------------

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  Polynomial quotient;
  Polynomial rest = a;
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_coeff = b.leading_coefficient();
  while (!rest.is_zero()) {
    auto m = rest.leading_monomial().divide(lead);
    if (!m) throw Error("polynomial division is not exact");
    Polynomial t = Polynomial::term(*m, rest.leading_coefficient() / lead_coeff);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_coefficient());
}

namespace {

uint32_t degree_of(const std::map<uint32_t, Polynomial>& coeffs) {
  return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

/// gcd of all coefficients of p viewed as univariate in `var`.
Polynomial content_in(const Polynomial& p, uint32_t var) {
  Polynomial g;
  for (const auto& [deg, coeff] : p.coefficients_in(var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, uint32_t var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var));
}

/// Pseudo-remainder of a by b in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, uint32_t var) {
  auto bc = b.coefficients_in(var);
  uint32_t n = degree_of(bc);
  const Polynomial lead_b = bc.rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero()) {
    auto rc = r.coefficients_in(var);
    uint32_t m = degree_of(rc);
    if (m < n) break;
    Polynomial shift = Polynomial::term(Monomial::variable(var, m - n), 1);
    r = lead_b * r - rc.rbegin()->second * shift * b;
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  uint32_t var = std::min(*a.min_variable(), *b.min_variable());
  if (!a.contains(var)) return gcd(a, content_in(b, var));
  if (!b.contains(var)) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);
  Polynomial content = gcd(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return monic(content * primitive_part(pb, var));
}

}  // namespace probe::parametric
