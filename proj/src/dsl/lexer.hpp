#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finrel/dsl/ast.hpp"

namespace finrel::dsl {

enum class Tok {
  Ident,
  Int,
  Keyword,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Semi,
  Arrow,
  Tilde,
  Equal,
  SubsetEq,
  Intersect,
  Union,
  Dot,
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

bool is_keyword(std::string_view word);

/// Whole-input tokenizer. Skips whitespace and "#" comments; accepts the
/// UTF-8 spellings ∩ ∪ ⊆ and the ASCII alternates & | <=. Throws ParseError
/// on an unexpected byte. Columns count code points, 1-based.
std::vector<Token> lex(std::string_view text);

}  // namespace finrel::dsl
