#pragma once

#include <string_view>
#include <vector>

#include "probe/frontend/ast.hpp"
#include "probe/frontend/lexer.hpp"

namespace probe::frontend {

/// Parses and validates a program. Throws SyntaxError or ValidationError.
Program parse_program(std::string_view source);

/// Syntax only: variables are left unresolved and statements unnumbered.
Program parse_program_unchecked(std::string_view source);

/// Recursive-descent parser for arithmetic and boolean expressions, shared by
/// the program and property parsers.
class ExprParser {
 public:
  explicit ExprParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  AExprPtr parse_aexpr();
  /// `!` binds tighter than `&`, which binds tighter than `|`. Mixing `&` and
  /// `|` at the same nesting level without parentheses is rejected.
  BExprPtr parse_bexpr();

  const Token& peek(size_t ahead = 0) const;
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind, const char* context);
  bool at_word(std::string_view word) const;
  bool at_end() const { return peek().kind == Tok::End; }
  [[noreturn]] void fail(const std::string& message) const;

 protected:
  std::vector<Token> toks_;
  size_t pos_ = 0;

 private:
  AExprPtr parse_term();
  AExprPtr parse_factor();
  BExprPtr parse_or();
  BExprPtr parse_and(bool& chained);
  BExprPtr parse_unary();
  BExprPtr parse_bprimary();
  BExprPtr parse_comparison();
};

bool is_reserved(std::string_view word);

}  // namespace probe::frontend
