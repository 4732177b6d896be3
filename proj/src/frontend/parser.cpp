#include "probe/frontend/parser.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

#include "probe/frontend/validate.hpp"

namespace probe::frontend {

using parametric::Polynomial;
using parametric::Rational;

bool is_reserved(std::string_view word) {
  static constexpr std::array<std::string_view, 9> kWords = {
      "int", "skip", "abort", "if", "else", "while", "observe", "true", "false"};
  return std::find(kWords.begin(), kWords.end(), word) != kWords.end();
}

const Token& ExprParser::peek(size_t ahead) const {
  return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
}

const Token& ExprParser::next() {
  const Token& t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool ExprParser::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& ExprParser::expect(Tok kind, const char* context) {
  if (peek().kind != kind) {
    std::string found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
    fail("expected " + describe(kind) + " " + context + ", found " + found);
  }
  return next();
}

bool ExprParser::at_word(std::string_view word) const {
  return peek().kind == Tok::Ident && peek().text == word;
}

void ExprParser::fail(const std::string& message) const { throw SyntaxError(peek().loc, message); }

namespace {

int64_t integer_literal(const Token& t, bool negative) {
  if (t.text.find_first_not_of("0123456789") != std::string::npos) {
    throw SyntaxError(t.loc, "expected an integer, found '" + t.text + "'");
  }
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  uint64_t limit = static_cast<uint64_t>(std::numeric_limits<int64_t>::max()) + (negative ? 1 : 0);
  if (ec != std::errc() || v > limit) throw SyntaxError(t.loc, "integer literal out of range");
  if (negative) return v == limit ? std::numeric_limits<int64_t>::min() : -static_cast<int64_t>(v);
  return static_cast<int64_t>(v);
}

bool is_comparison(Tok t) {
  return t == Tok::Eq || t == Tok::Ne || t == Tok::Lt || t == Tok::Le || t == Tok::Gt || t == Tok::Ge;
}

bool is_arith_op(Tok t) { return t == Tok::Plus || t == Tok::Minus || t == Tok::Star; }

}  // namespace

AExprPtr ExprParser::parse_aexpr() {
  SourceLocation loc = peek().loc;
  AExprPtr lhs = parse_term();
  while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
    auto kind = next().kind == Tok::Plus ? AExpr::Kind::Add : AExpr::Kind::Sub;
    lhs = binary(kind, lhs, parse_term());
    lhs->loc = loc;
  }
  return lhs;
}

AExprPtr ExprParser::parse_term() {
  SourceLocation loc = peek().loc;
  AExprPtr lhs = parse_factor();
  while (accept(Tok::Star)) {
    lhs = binary(AExpr::Kind::Mul, lhs, parse_factor());
    lhs->loc = loc;
  }
  return lhs;
}

AExprPtr ExprParser::parse_factor() {
  const Token& t = peek();
  SourceLocation loc = t.loc;
  AExprPtr e;
  switch (t.kind) {
    case Tok::Number:
      e = lit(integer_literal(next(), false));
      break;
    case Tok::Minus:
      next();
      if (peek().kind == Tok::Number) {
        e = lit(integer_literal(next(), true));
      } else {
        e = binary(AExpr::Kind::Sub, lit(0), parse_factor());
      }
      break;
    case Tok::Ident:
      if (is_reserved(t.text)) fail("unexpected keyword '" + t.text + "' in expression");
      e = var(next().text);
      break;
    case Tok::LParen:
      next();
      e = parse_aexpr();
      expect(Tok::RParen, "to close arithmetic expression");
      return e;
    default:
      fail("expected an arithmetic expression, found " +
           (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
  }
  e->loc = loc;
  return e;
}

BExprPtr ExprParser::parse_bexpr() { return parse_or(); }

BExprPtr ExprParser::parse_or() {
  SourceLocation loc = peek().loc;
  bool chained = false;
  BExprPtr lhs = parse_and(chained);
  if (peek().kind != Tok::Or) return lhs;
  if (chained) fail("mixing '&' and '|' requires parentheses");
  while (accept(Tok::Or)) {
    BExprPtr rhs = parse_and(chained);
    if (chained) throw SyntaxError(rhs->loc, "mixing '&' and '|' requires parentheses");
    lhs = disj(lhs, rhs);
    lhs->loc = loc;
  }
  return lhs;
}

BExprPtr ExprParser::parse_and(bool& chained) {
  SourceLocation loc = peek().loc;
  chained = false;
  BExprPtr lhs = parse_unary();
  while (accept(Tok::And)) {
    lhs = conj(lhs, parse_unary());
    lhs->loc = loc;
    chained = true;
  }
  return lhs;
}

BExprPtr ExprParser::parse_unary() {
  SourceLocation loc = peek().loc;
  if (accept(Tok::Not)) {
    BExprPtr e = negate(parse_unary());
    e->loc = loc;
    return e;
  }
  return parse_bprimary();
}

BExprPtr ExprParser::parse_bprimary() {
  SourceLocation loc = peek().loc;
  if (at_word("true") || at_word("false")) {
    BExprPtr e = truth(next().text == "true");
    e->loc = loc;
    return e;
  }
  if (peek().kind == Tok::LParen) {
    // "(" may open a boolean group or the left operand of a comparison.
    size_t saved = pos_;
    std::optional<SyntaxError> first_error;
    try {
      next();
      BExprPtr e = parse_bexpr();
      expect(Tok::RParen, "to close boolean expression");
      if (!is_comparison(peek().kind) && !is_arith_op(peek().kind)) return e;
    } catch (const SyntaxError& err) {
      first_error = err;
    }
    size_t reached = pos_;
    pos_ = saved;
    try {
      return parse_comparison();
    } catch (const SyntaxError&) {
      // Report whichever reading got further into the input.
      if (first_error && reached > pos_) throw *first_error;
      throw;
    }
  }
  return parse_comparison();
}

BExprPtr ExprParser::parse_comparison() {
  SourceLocation loc = peek().loc;
  AExprPtr lhs = parse_aexpr();
  CmpOp op;
  switch (peek().kind) {
    case Tok::Eq: op = CmpOp::Eq; break;
    case Tok::Ne: op = CmpOp::Ne; break;
    case Tok::Lt: op = CmpOp::Lt; break;
    case Tok::Le: op = CmpOp::Le; break;
    case Tok::Gt: op = CmpOp::Gt; break;
    case Tok::Ge: op = CmpOp::Ge; break;
    default: fail("expected a comparison operator");
  }
  next();
  BExprPtr e = cmp(op, lhs, parse_aexpr());
  e->loc = loc;
  return e;
}

namespace {

class ProgramParser : public ExprParser {
 public:
  using ExprParser::ExprParser;

  Program parse() {
    Program program;
    while (at_word("int")) program.declarations.push_back(parse_declaration());
    std::vector<StmtPtr> body;
    while (!at_end()) body.push_back(parse_statement());
    program.body = fold(std::move(body));

    // Parameters are indexed in name order, independent of first use.
    std::vector<std::string> sorted = params_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<uint32_t> mapping(params_.size());
    for (size_t i = 0; i < params_.size(); ++i) {
      mapping[i] = static_cast<uint32_t>(std::find(sorted.begin(), sorted.end(), params_[i]) - sorted.begin());
    }
    remap_weights(program.body.get(), mapping);
    program.parameters = parametric::ParameterSet(sorted);
    return program;
  }

 private:
  Declaration parse_declaration() {
    SourceLocation loc = next().loc;
    const Token& name = expect(Tok::Ident, "after 'int'");
    if (is_reserved(name.text)) throw SyntaxError(name.loc, "'" + name.text + "' is a keyword");
    Declaration d{name.text, 0, loc};
    if (accept(Tok::Assign)) {
      bool negative = accept(Tok::Minus);
      d.initial = integer_literal(expect(Tok::Number, "as initial value"), negative);
    }
    expect(Tok::Semi, "after declaration");
    return d;
  }

  static StmtPtr fold(std::vector<StmtPtr> stmts) {
    if (stmts.empty()) return skip();
    StmtPtr s = stmts.back();
    for (size_t i = stmts.size() - 1; i-- > 0;) {
      SourceLocation loc = stmts[i]->loc;
      s = seq(stmts[i], s);
      s->loc = loc;
    }
    return s;
  }

  StmtPtr parse_block() {
    expect(Tok::LBrace, "to open block");
    std::vector<StmtPtr> stmts;
    while (peek().kind != Tok::RBrace) {
      if (at_end()) fail("unterminated block");
      stmts.push_back(parse_statement());
    }
    next();
    return fold(std::move(stmts));
  }

  StmtPtr parse_statement() {
    const Token& t = peek();
    SourceLocation loc = t.loc;
    StmtPtr s;
    if (t.kind == Tok::LBrace) {
      s = parse_choice_chain();
    } else if (t.kind != Tok::Ident) {
      fail("expected a statement, found '" + t.text + "'");
    } else if (t.text == "int") {
      fail("declarations must precede all statements");
    } else if (t.text == "skip" || t.text == "abort") {
      s = next().text == "skip" ? skip() : abort_stmt();
      expect(Tok::Semi, ("after '" + t.text + "'").c_str());
    } else if (t.text == "if") {
      s = parse_if();
    } else if (t.text == "while") {
      next();
      expect(Tok::LParen, "after 'while'");
      BExprPtr cond = parse_bexpr();
      expect(Tok::RParen, "after loop condition");
      s = while_stmt(cond, parse_block());
    } else if (t.text == "observe") {
      next();
      expect(Tok::LParen, "after 'observe'");
      BExprPtr cond = parse_bexpr();
      expect(Tok::RParen, "after observed condition");
      expect(Tok::Semi, "after observe statement");
      s = observe(cond);
    } else if (is_reserved(t.text)) {
      fail("unexpected keyword '" + t.text + "'");
    } else {
      std::string name = next().text;
      expect(Tok::Assign, ("after '" + name + "'").c_str());
      if (at_word("unif") && peek(1).kind == Tok::LParen) {
        next();
        next();
        AExprPtr lo = parse_aexpr();
        expect(Tok::Comma, "between unif bounds");
        AExprPtr hi = parse_aexpr();
        expect(Tok::RParen, "after unif bounds");
        s = uniform(name, lo, hi);
      } else {
        s = assign(name, parse_aexpr());
      }
      expect(Tok::Semi, "after assignment");
    }
    s->loc = loc;
    return s;
  }

  StmtPtr parse_if() {
    SourceLocation loc = next().loc;
    expect(Tok::LParen, "after 'if'");
    BExprPtr cond = parse_bexpr();
    expect(Tok::RParen, "after if condition");
    StmtPtr then_branch = parse_block();
    StmtPtr else_branch;
    if (at_word("else")) {
      next();
      else_branch = at_word("if") ? parse_if() : parse_block();
    }
    StmtPtr s = if_stmt(cond, then_branch, else_branch);
    s->loc = loc;
    return s;
  }

  /// `{A} [g] {B} [] {C} ...`, left-associative.
  StmtPtr parse_choice_chain() {
    SourceLocation loc = peek().loc;
    StmtPtr lhs = parse_block();
    while (peek().kind == Tok::LBracket) {
      next();
      if (accept(Tok::RBracket)) {
        lhs = nondet(lhs, parse_block());
        lhs->loc = loc;
      } else {
        // Located at the probability so range errors point at it.
        SourceLocation wloc = peek().loc;
        Polynomial g = parse_weight_sum();
        expect(Tok::RBracket, "after probability");
        lhs = prob(lhs, g, parse_block());
        lhs->loc = wloc;
      }
    }
    accept(Tok::Semi);
    return lhs;
  }

  Polynomial parse_weight_sum() {
    Polynomial p = parse_weight_product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = next().kind == Tok::Plus;
      Polynomial q = parse_weight_product();
      p = plus ? p + q : p - q;
    }
    return p;
  }

  Polynomial parse_weight_product() {
    Polynomial p = parse_weight_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool times = next().kind == Tok::Star;
      SourceLocation loc = peek().loc;
      Polynomial q = parse_weight_unary();
      if (times) {
        p = p * q;
      } else {
        if (!q.is_constant() || q.is_zero()) {
          throw SyntaxError(loc, "probabilities may only be divided by nonzero constants");
        }
        p = p.scaled(1 / q.constant_value());
      }
    }
    return p;
  }

  Polynomial parse_weight_unary() {
    if (accept(Tok::Minus)) return -parse_weight_unary();
    Polynomial base = parse_weight_atom();
    if (accept(Tok::Caret)) {
      const Token& e = expect(Tok::Number, "as exponent");
      int64_t n = integer_literal(e, false);
      if (n > 64) throw SyntaxError(e.loc, "exponent too large");
      base = base.pow(static_cast<uint32_t>(n));
    }
    return base;
  }

  Polynomial parse_weight_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      auto r = parametric::parse_rational(t.text);
      if (!r) fail("malformed number '" + t.text + "'");
      next();
      return Polynomial(*r);
    }
    if (t.kind == Tok::Ident) {
      if (is_reserved(t.text)) fail("unexpected keyword '" + t.text + "' in probability");
      for (const auto& d : declarations_) {
        if (d == t.text) {
          fail("probability refers to program variable '" + t.text + "'; only parameters are allowed");
        }
      }
      std::string name = next().text;
      auto it = std::find(params_.begin(), params_.end(), name);
      if (it == params_.end()) {
        params_.push_back(name);
        it = params_.end() - 1;
      }
      return Polynomial::variable(static_cast<uint32_t>(it - params_.begin()));
    }
    if (accept(Tok::LParen)) {
      Polynomial p = parse_weight_sum();
      expect(Tok::RParen, "to close probability expression");
      return p;
    }
    fail("expected a probability expression");
  }

  static void remap_weights(Stmt* s, const std::vector<uint32_t>& mapping) {
    if (!s) return;
    if (s->kind == Stmt::Kind::Prob) s->weight = s->weight.remap(mapping);
    remap_weights(s->first.get(), mapping);
    remap_weights(s->second.get(), mapping);
  }

 public:
  void note_declarations(const std::vector<Declaration>& decls) {
    for (const auto& d : decls) declarations_.push_back(d.name);
  }

 private:
  std::vector<std::string> declarations_;
  std::vector<std::string> params_;
};

}  // namespace

Program parse_program_unchecked(std::string_view source) {
  // Declarations must be known before probabilities are parsed, so that a
  // variable used as a probability is reported rather than taken as a
  // parameter. Scan them in a first pass.
  std::vector<Token> tokens = tokenize(source);
  std::vector<Declaration> decls;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].kind == Tok::Ident && tokens[i].text == "int" && tokens[i + 1].kind == Tok::Ident) {
      decls.push_back({tokens[i + 1].text, 0, tokens[i].loc});
    }
  }
  ProgramParser parser(std::move(tokens));
  parser.note_declarations(decls);
  return parser.parse();
}

Program parse_program(std::string_view source) {
  Program p = parse_program_unchecked(source);
  validate(p);
  return p;
}

}  // namespace probe::frontend
