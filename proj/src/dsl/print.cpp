#include "finrel/dsl/print.hpp"

#include <sstream>

namespace finrel::dsl {

namespace {

// precedence levels: union 0, intersect 1, compose 2, prefix 3, postfix 4
int level_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Union:
      return 0;
    case ExprKind::Intersect:
      return 1;
    case ExprKind::Compose:
      return 2;
    case ExprKind::Dom:
    case ExprKind::Ran:
    case ExprKind::Id:
    case ExprKind::Prod:
    case ExprKind::DSum:
    case ExprKind::Transpose:
    case ExprKind::Uncurry:
    case ExprKind::Curry:
    case ExprKind::Inverse:
    case ExprKind::Graph:
    case ExprKind::FunOf:
    case ExprKind::Tab:
      return 3;
    case ExprKind::Converse:
      return 4;
    default:
      return 5;
  }
}

const char* prefix_spelling(ExprKind k) {
  switch (k) {
    case ExprKind::Dom:
      return "dom";
    case ExprKind::Ran:
      return "ran";
    case ExprKind::Id:
      return "id";
    case ExprKind::Prod:
      return "prod";
    case ExprKind::DSum:
      return "dsum";
    case ExprKind::Transpose:
      return "tr";
    case ExprKind::Uncurry:
      return "unc";
    case ExprKind::Curry:
      return "cur";
    case ExprKind::Inverse:
      return "inv";
    case ExprKind::Graph:
      return "graph";
    case ExprKind::FunOf:
      return "fun";
    case ExprKind::Tab:
      return "tab";
    default:
      return nullptr;
  }
}

const char* call_spelling(ExprKind k) {
  switch (k) {
    case ExprKind::Pr:
      return "pr";
    case ExprKind::Inj:
      return "inj";
    case ExprKind::Apply:
      return "apply";
    case ExprKind::Space:
      return "space";
    case ExprKind::PSpace:
      return "pspace";
    case ExprKind::Alpha:
      return "alpha";
    case ExprKind::Proxy:
      return "proxy";
    case ExprKind::Fork:
      return "fork";
    case ExprKind::Par:
      return "par";
    default:
      return nullptr;
  }
}

void render(const Expr& e, int min_level, std::ostream& os) {
  const bool parens = level_of(e) < min_level;
  if (parens) os << '(';
  switch (e.kind) {
    case ExprKind::Name:
      os << e.name;
      break;
    case ExprKind::Literal:
      os << to_string(e.literal);
      break;
    case ExprKind::Converse:
      render(*e.args[0], 4, os);
      os << '~';
      break;
    case ExprKind::Compose:
      render(*e.args[0], 2, os);
      os << " o ";
      render(*e.args[1], 3, os);
      break;
    case ExprKind::Intersect:
      render(*e.args[0], 1, os);
      os << " ∩ ";
      render(*e.args[1], 2, os);
      break;
    case ExprKind::Union:
      render(*e.args[0], 0, os);
      os << " ∪ ";
      render(*e.args[1], 1, os);
      break;
    default:
      if (const char* kw = prefix_spelling(e.kind)) {
        os << kw << ' ';
        render(*e.args[0], 3, os);
      } else {
        os << call_spelling(e.kind) << '(';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          if (i) os << ", ";
          render(*e.args[i], 0, os);
        }
        os << ')';
      }
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string print(const Expr& e) {
  std::ostringstream os;
  render(e, 0, os);
  return os.str();
}

std::string print(const Stmt& s) {
  std::ostringstream os;
  switch (s.kind) {
    case StmtKind::SetDecl:
      os << "set " << s.name << " = " << to_string(s.payload) << ";";
      break;
    case StmtKind::RelDecl:
      os << "rel " << s.name << " = " << to_string(s.payload) << ";";
      break;
    case StmtKind::FunDecl:
      os << "fun " << s.name << " = " << to_string(s.payload) << ";";
      break;
    case StmtKind::FamDecl:
      os << "fam " << s.name << " = " << to_string(s.payload) << ";";
      break;
    case StmtKind::Eval:
      os << "eval " << print(*s.a) << ";";
      break;
    case StmtKind::CheckLaw:
      os << "check " << s.law_id << ";";
      break;
    case StmtKind::CheckEq:
      os << "check " << print(*s.a) << " = " << print(*s.b) << ";";
      break;
    case StmtKind::AssertSub:
      os << "assert " << print(*s.a) << " ⊆ " << print(*s.b) << ";";
      break;
  }
  return os.str();
}

std::string print(const Script& s) {
  std::ostringstream os;
  for (const Stmt& st : s.stmts) os << print(st) << "\n";
  return os.str();
}

}  // namespace finrel::dsl
