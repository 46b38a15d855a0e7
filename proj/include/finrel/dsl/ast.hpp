#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "finrel/value.hpp"

namespace finrel::dsl {

struct Pos {
  int line = 1;
  int col = 1;
};

enum class ExprKind {
  Name,
  Literal,
  // prefix operators
  Dom,
  Ran,
  Id,
  Prod,
  DSum,
  Transpose,
  Uncurry,
  Curry,
  Inverse,
  Graph,
  FunOf,
  Tab,
  // postfix
  Converse,
  // infix
  Compose,
  Intersect,
  Union,
  // calls
  Pr,
  Inj,
  Apply,
  Space,
  PSpace,
  Alpha,
  Proxy,
  Fork,
  Par,
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  ExprKind kind;
  Pos pos;
  std::string name;           // Name
  Value literal;              // Literal
  std::vector<ExprPtr> args;  // operands, in source order
};

enum class StmtKind { SetDecl, RelDecl, FunDecl, FamDecl, Eval, CheckLaw, CheckEq, AssertSub };

struct Stmt {
  StmtKind kind;
  Pos pos;
  std::string name;    // declarations
  Value payload;       // declaration literal (a set value or a function value)
  std::string law_id;  // CheckLaw
  ExprPtr a, b;        // Eval uses a; CheckEq and AssertSub use a and b
};

struct Script {
  std::vector<Stmt> stmts;
};

/// Structural equality, ignoring source positions.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const Script& a, const Script& b);

/// Parse failure with a 1-based source position, the offending token text and
/// the token set that would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(Pos pos, std::string offending, std::vector<std::string> expected);
  Pos pos;
  std::string offending;
  std::vector<std::string> expected;
};

}  // namespace finrel::dsl
