#pragma once

#include <string>

#include "finrel/dsl/ast.hpp"

namespace finrel::dsl {

/// Canonical formatting: one statement per line, canonical value order inside
/// literals, canonical operator spellings ("o", "∩", "∪", "⊆"), minimal
/// parentheses. print(parse(print(x))) == print(x).
std::string print(const Script& s);
std::string print(const Stmt& s);
std::string print(const Expr& e);

}  // namespace finrel::dsl
