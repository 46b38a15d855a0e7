#pragma once

#include <string_view>

#include "finrel/dsl/ast.hpp"

namespace finrel::dsl {

/// Parses a script: ";"-terminated statements, "#" line comments, UTF-8.
/// Declaration before use; a declared name used as an atom (or redeclared,
/// or shadowing an already-used atom) is a parse-time collision. Throws
/// ParseError.
Script parse(std::string_view text);

}  // namespace finrel::dsl
