#include "lexer.hpp"

#include <array>
#include <cctype>

namespace finrel::dsl {

namespace {

constexpr std::array<std::string_view, 27> kKeywords = {
    "set",  "rel",  "fun",   "fam",  "eval", "check", "assert", "dom",   "ran",
    "id",   "prod", "dsum",  "pr",   "inj",  "tr",    "unc",    "cur",   "fork",
    "par",  "tab",  "inv",   "graph", "apply", "space", "pspace", "alpha", "proxy"};

}  // namespace

bool is_keyword(std::string_view word) {
  if (word == "o") return true;
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  Pos pos{1, 1};

  auto bump = [&](std::size_t bytes, int cols) {
    i += bytes;
    pos.col += cols;
  };
  auto push = [&](Tok kind, std::string tok_text, Pos at) {
    out.push_back(Token{kind, std::move(tok_text), at});
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++pos.line;
      pos.col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      bump(1, 1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }

    const Pos at = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      bump(j - i, static_cast<int>(j - i));
      const Tok kind = is_keyword(word) ? Tok::Keyword : Tok::Ident;
      push(kind, std::move(word), at);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string digits(text.substr(i, j - i));
      bump(j - i, static_cast<int>(j - i));
      push(Tok::Int, std::move(digits), at);
      continue;
    }

    auto simple = [&](Tok kind, const char* t) {
      bump(1, 1);
      push(kind, t, at);
    };
    switch (c) {
      case '{':
        simple(Tok::LBrace, "{");
        continue;
      case '}':
        simple(Tok::RBrace, "}");
        continue;
      case '(':
        simple(Tok::LParen, "(");
        continue;
      case ')':
        simple(Tok::RParen, ")");
        continue;
      case ',':
        simple(Tok::Comma, ",");
        continue;
      case ';':
        simple(Tok::Semi, ";");
        continue;
      case '~':
        simple(Tok::Tilde, "~");
        continue;
      case '=':
        simple(Tok::Equal, "=");
        continue;
      case '.':
        simple(Tok::Dot, ".");
        continue;
      case '&':
        simple(Tok::Intersect, "∩");
        continue;
      case '|':
        simple(Tok::Union, "∪");
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          bump(2, 2);
          push(Tok::Arrow, "->", at);
        } else {
          simple(Tok::Minus, "-");
        }
        continue;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          bump(2, 2);
          push(Tok::SubsetEq, "⊆", at);
          continue;
        }
        throw ParseError(at, std::string(1, c), {"<="});
      default:
        break;
    }

    // UTF-8 operators: ∩ (E2 88 A9), ∪ (E2 88 AA), ⊆ (E2 8A 86)
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size()) {
      const unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      const unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      if (b1 == 0x88 && b2 == 0xA9) {
        bump(3, 1);
        push(Tok::Intersect, "∩", at);
        continue;
      }
      if (b1 == 0x88 && b2 == 0xAA) {
        bump(3, 1);
        push(Tok::Union, "∪", at);
        continue;
      }
      if (b1 == 0x8A && b2 == 0x86) {
        bump(3, 1);
        push(Tok::SubsetEq, "⊆", at);
        continue;
      }
    }
    throw ParseError(at, std::string(1, c), {"a token"});
  }
  out.push_back(Token{Tok::End, "<end of input>", pos});
  return out;
}

}  // namespace finrel::dsl
