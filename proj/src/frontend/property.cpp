#include "probe/frontend/property.hpp"

#include <sstream>

#include "probe/frontend/parser.hpp"
#include "probe/frontend/printer.hpp"
#include "probe/frontend/validate.hpp"

namespace probe::frontend {

using parametric::Rational;

namespace {

class PropertyParser : public ExprParser {
 public:
  using ExprParser::ExprParser;

  Property parse() {
    Property p;
    std::optional<SchedulerMode> mode = parse_mode();
    if (at_word("P")) {
      p.kind = QueryKind::Probability;
    } else if (at_word("E")) {
      p.kind = QueryKind::Expectation;
    } else {
      fail("expected 'P' or 'E'");
    }
    next();
    if (auto m = parse_mode()) {
      if (mode) fail("scheduler mode given twice");
      mode = m;
    }

    switch (peek().kind) {
      case Tok::Lt: p.comparison = Comparison::Less; break;
      case Tok::Le: p.comparison = Comparison::LessEqual; break;
      case Tok::Gt: p.comparison = Comparison::Greater; break;
      case Tok::Ge: p.comparison = Comparison::GreaterEqual; break;
      default: fail("expected one of <, <=, >, >=");
    }
    next();
    p.mode = mode.value_or(p.lower_bounded() ? SchedulerMode::Min : SchedulerMode::Max);

    SourceLocation tloc = peek().loc;
    p.threshold = parse_threshold();
    if (p.kind == QueryKind::Expectation && p.threshold < 0) {
      throw SyntaxError(tloc, "expectation threshold must be nonnegative");
    }
    if (p.kind == QueryKind::Probability && (p.threshold < 0 || p.threshold > 1)) {
      throw SyntaxError(tloc, "probability threshold must lie in [0, 1]");
    }

    expect(Tok::LBracket, "before the query expression");
    if (p.kind == QueryKind::Probability) {
      p.target = parse_bexpr();
    } else {
      p.objective = parse_aexpr();
    }
    expect(Tok::RBracket, "after the query expression");
    if (!at_end()) fail("unexpected trailing input '" + peek().text + "'");
    return p;
  }

 private:
  std::optional<SchedulerMode> parse_mode() {
    if (at_word("min")) {
      next();
      return SchedulerMode::Min;
    }
    if (at_word("max")) {
      next();
      return SchedulerMode::Max;
    }
    return std::nullopt;
  }

  Rational parse_threshold() {
    bool negative = accept(Tok::Minus);
    const Token& t = expect(Tok::Number, "as threshold");
    auto value = parametric::parse_rational(t.text);
    if (!value) throw SyntaxError(t.loc, "malformed threshold '" + t.text + "'");
    if (accept(Tok::Slash)) {
      const Token& d = expect(Tok::Number, "as threshold denominator");
      auto den = parametric::parse_rational(d.text);
      if (!den || *den == 0) throw SyntaxError(d.loc, "malformed threshold denominator");
      *value /= *den;
    }
    return negative ? Rational(-*value) : *value;
  }
};

}  // namespace

Property parse_property(std::string_view text) { return PropertyParser(tokenize(text)).parse(); }

std::vector<Property> parse_property_file(std::string_view text) {
  std::vector<Property> out;
  std::istringstream in{std::string(text)};
  std::string line;
  uint32_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_property(line));
    } catch (const SyntaxError& e) {
      throw SyntaxError({number, e.location().column}, std::string(e.what()).substr(e.location().str().size() + 2));
    }
  }
  return out;
}

Property bind(const Property& property, const Program& program) {
  Property p = property;
  if (p.target) p.target = resolve(p.target, program);
  if (p.objective) p.objective = resolve(p.objective, program);
  return p;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
  }
  return "?";
}

std::string to_string(SchedulerMode m) { return m == SchedulerMode::Min ? "min" : "max"; }

std::string Property::str() const {
  std::ostringstream out;
  out << to_string(mode) << " " << (kind == QueryKind::Probability ? "P" : "E") << " " << to_string(comparison)
      << " " << threshold.get_str() << " [ " << reward_key().substr(2, reward_key().size() - 3) << " ]";
  return out.str();
}

std::string Property::reward_key() const {
  if (kind == QueryKind::Probability) return "P[" + (target ? print(*target) : std::string("true")) + "]";
  return "E[" + (objective ? print(*objective) : std::string("0")) + "]";
}

}  // namespace probe::frontend
