#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "probe/error.hpp"

namespace probe::frontend {

enum class Tok : uint8_t {
  Ident,
  Number,   // 12, 0.091, 3.4e-3
  Assign,   // :=
  Semi,
  Comma,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Eq,       // = or ==
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Not,
  And,      // & or &&
  Or,       // | or ||
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLocation loc;
};

/// Splits source text into tokens; `//` comments and whitespace are dropped.
/// The result always ends with a Tok::End token.
std::vector<Token> tokenize(std::string_view source);

std::string describe(Tok kind);

}  // namespace probe::frontend
