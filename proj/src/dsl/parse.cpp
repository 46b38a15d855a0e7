#include "finrel/dsl/parse.hpp"

#include <map>
#include <set>
#include <sstream>

#include "finrel/errors.hpp"
#include "finrel/function.hpp"
#include "lexer.hpp"

namespace finrel::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Script run() {
    Script script;
    while (peek().kind != Tok::End) script.stmts.push_back(statement());
    return script;
  }

 private:
  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  std::map<std::string, StmtKind> declared_;
  std::set<std::string> used_atoms_;

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = cur_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& advance() { return toks_[cur_ < toks_.size() - 1 ? cur_++ : cur_]; }

  [[noreturn]] void fail(const Token& at, std::vector<std::string> expected) {
    throw ParseError(at.pos, at.text, std::move(expected));
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Keyword && peek().text == kw;
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), {what});
    return advance();
  }

  void expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(peek(), {std::string("'") + kw + "'"});
    advance();
  }

  // ---- declarations and literals ----------------------------------------

  std::int64_t parse_int(const Token& t) {
    try {
      return static_cast<std::int64_t>(std::stoll(t.text));
    } catch (const std::out_of_range&) {
      fail(t, {"a smaller integer"});
    }
  }

  std::string decl_name() {
    const Token& t = expect(Tok::Ident, "a name");
    if (declared_.count(t.text)) fail(t, {"an undeclared name (already declared)"});
    if (used_atoms_.count(t.text))
      fail(t, {"an unused name (already occurs as an atom)"});
    return t.text;
  }

  Value value_literal() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        if (declared_.count(t.text))
          fail(t, {"an atom (this name is declared; names cannot appear inside literals)"});
        used_atoms_.insert(t.text);
        advance();
        return Value::atom(t.text);
      }
      case Tok::Int: {
        advance();
        return Value::atom(parse_int(t));
      }
      case Tok::LParen: {
        advance();
        Value first = value_literal();
        expect(Tok::Comma, "','");
        Value second = value_literal();
        expect(Tok::RParen, "')'");
        return Value::pair(std::move(first), std::move(second));
      }
      case Tok::LBrace:
        return set_literal();
      default:
        fail(t, {"an atom", "a number", "'('", "'{'"});
    }
  }

  Value set_literal() {
    expect(Tok::LBrace, "'{'");
    std::vector<Value> elems;
    if (peek().kind != Tok::RBrace) {
      elems.push_back(value_literal());
      while (peek().kind == Tok::Comma) {
        advance();
        elems.push_back(value_literal());
      }
    }
    expect(Tok::RBrace, "'}'");
    return Value::set(VSet(std::move(elems)));
  }

  Value pair_list() {
    expect(Tok::LBrace, "'{'");
    std::vector<Value> elems;
    if (peek().kind != Tok::RBrace) {
      for (;;) {
        const Token& t = peek();
        Value v = value_literal();
        if (!v.is_pair()) fail(t, {"a pair '(x, y)'"});
        elems.push_back(std::move(v));
        if (peek().kind != Tok::Comma) break;
        advance();
      }
    }
    expect(Tok::RBrace, "'}'");
    return Value::set(VSet(std::move(elems)));
  }

  Value map_list() {
    const Token& open = peek();
    expect(Tok::LBrace, "'{'");
    std::vector<std::pair<Value, Value>> entries;
    if (peek().kind != Tok::RBrace) {
      for (;;) {
        Value key = value_literal();
        expect(Tok::Arrow, "'->'");
        Value val = value_literal();
        entries.emplace_back(std::move(key), std::move(val));
        if (peek().kind != Tok::Comma) break;
        advance();
      }
    }
    expect(Tok::RBrace, "'}'");
    try {
      return Value::function(Fun::from_entries(std::move(entries)));
    } catch (const NotFunctional& e) {
      throw ParseError(open.pos, to_string(e.witness),
                       {"distinct arguments in a function literal"});
    }
  }

  // ---- expressions -------------------------------------------------------

  ExprPtr mk(ExprKind kind, Pos pos) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    return e;
  }

  bool starts_expression(const Token& t) const {
    switch (t.kind) {
      case Tok::Ident:
      case Tok::Int:
      case Tok::LBrace:
      case Tok::LParen:
        return true;
      case Tok::Keyword:
        return t.text != "set" && t.text != "rel" && t.text != "fun" && t.text != "fam" &&
               t.text != "eval" && t.text != "check" && t.text != "assert" && t.text != "o";
      default:
        return false;
    }
  }

  ExprPtr expression() { return union_expr(); }

  ExprPtr union_expr() {
    ExprPtr left = intersect_expr();
    while (peek().kind == Tok::Union) {
      const Pos at = peek().pos;
      advance();
      auto node = mk(ExprKind::Union, at);
      node->args = {left, intersect_expr()};
      left = node;
    }
    return left;
  }

  ExprPtr intersect_expr() {
    ExprPtr left = compose_expr();
    while (peek().kind == Tok::Intersect) {
      const Pos at = peek().pos;
      advance();
      auto node = mk(ExprKind::Intersect, at);
      node->args = {left, compose_expr()};
      left = node;
    }
    return left;
  }

  ExprPtr compose_expr() {
    ExprPtr left = unary_expr();
    for (;;) {
      if (at_keyword("o")) {
        const Pos at = peek().pos;
        advance();
        auto node = mk(ExprKind::Compose, at);
        node->args = {left, unary_expr()};
        left = node;
        continue;
      }
      // "f ; g" is accepted as composition in the swapped order; a ";"
      // followed by a statement keyword (or the end) terminates the statement
      if (peek().kind == Tok::Semi && starts_expression(peek(1))) {
        const Pos at = peek().pos;
        advance();
        auto node = mk(ExprKind::Compose, at);
        node->args = {unary_expr(), left};  // f ; g normalizes to g o f
        left = node;
        continue;
      }
      break;
    }
    return left;
  }

  struct PrefixOp {
    const char* kw;
    ExprKind kind;
  };

  ExprPtr unary_expr() {
    static const PrefixOp prefix[] = {
        {"dom", ExprKind::Dom},     {"ran", ExprKind::Ran},     {"id", ExprKind::Id},
        {"prod", ExprKind::Prod},   {"dsum", ExprKind::DSum},   {"tr", ExprKind::Transpose},
        {"unc", ExprKind::Uncurry}, {"cur", ExprKind::Curry},   {"inv", ExprKind::Inverse},
        {"graph", ExprKind::Graph}, {"fun", ExprKind::FunOf},   {"tab", ExprKind::Tab},
    };
    if (peek().kind == Tok::Keyword) {
      for (const auto& op : prefix) {
        if (peek().text == op.kw) {
          const Pos at = peek().pos;
          advance();
          auto node = mk(op.kind, at);
          node->args = {unary_expr()};
          return node;
        }
      }
    }
    return postfix_expr();
  }

  ExprPtr postfix_expr() {
    ExprPtr e = primary_expr();
    while (peek().kind == Tok::Tilde) {
      const Pos at = peek().pos;
      advance();
      auto node = mk(ExprKind::Converse, at);
      node->args = {e};
      e = node;
    }
    return e;
  }

  struct CallOp {
    const char* kw;
    ExprKind kind;
    int arity;
  };

  ExprPtr primary_expr() {
    static const CallOp calls[] = {
        {"pr", ExprKind::Pr, 2},       {"inj", ExprKind::Inj, 2},
        {"apply", ExprKind::Apply, 2}, {"space", ExprKind::Space, 2},
        {"pspace", ExprKind::PSpace, 2}, {"alpha", ExprKind::Alpha, 2},
        {"proxy", ExprKind::Proxy, 2}, {"fork", ExprKind::Fork, 3},
        {"par", ExprKind::Par, 3},
    };
    const Token& t = peek();
    if (t.kind == Tok::Keyword) {
      for (const auto& op : calls) {
        if (t.text == op.kw) {
          advance();
          auto node = mk(op.kind, t.pos);
          expect(Tok::LParen, "'('");
          for (int k = 0; k < op.arity; ++k) {
            if (k > 0) expect(Tok::Comma, "','");
            node->args.push_back(expression());
          }
          expect(Tok::RParen, "')'");
          return node;
        }
      }
      fail(t, {"an expression"});
    }
    if (t.kind == Tok::Ident) {
      advance();
      if (declared_.count(t.text)) {
        auto node = mk(ExprKind::Name, t.pos);
        node->name = t.text;
        return node;
      }
      used_atoms_.insert(t.text);
      auto node = mk(ExprKind::Literal, t.pos);
      node->literal = Value::atom(t.text);
      return node;
    }
    if (t.kind == Tok::Int) {
      advance();
      auto node = mk(ExprKind::Literal, t.pos);
      node->literal = Value::atom(parse_int(t));
      return node;
    }
    if (t.kind == Tok::LBrace) {
      auto node = mk(ExprKind::Literal, t.pos);
      node->literal = set_literal();
      return node;
    }
    if (t.kind == Tok::LParen) {
      advance();
      ExprPtr inner = expression();
      if (peek().kind == Tok::Comma) {
        // a pair literal: both components must be literal values
        if (inner->kind != ExprKind::Literal)
          fail(peek(), {"')' (pair components must be literal values)"});
        advance();
        ExprPtr rhs = expression();
        if (rhs->kind != ExprKind::Literal)
          fail(peek(), {"a literal value as the second pair component"});
        expect(Tok::RParen, "')'");
        auto node = mk(ExprKind::Literal, t.pos);
        node->literal = Value::pair(inner->literal, rhs->literal);
        return node;
      }
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail(t, {"an expression"});
  }

  // ---- statements --------------------------------------------------------

  std::string law_id_or_empty() {
    // law id := segment (('.' | '-') segment)*, immediately followed by ';'.
    // Segments may be keywords ("fun.space-count"), so this is tried first
    // and rolled back when it does not end at the statement terminator.
    const std::size_t save = cur_;
    auto segment = [&]() -> bool {
      return peek().kind == Tok::Ident || peek().kind == Tok::Keyword;
    };
    if (!segment()) return "";
    std::string id = advance().text;
    while (peek().kind == Tok::Dot || peek().kind == Tok::Minus) {
      id += (peek().kind == Tok::Dot) ? "." : "-";
      advance();
      if (!segment()) {
        cur_ = save;
        return "";
      }
      id += advance().text;
    }
    // the terminator must really end the statement; "check f ; g = ..." is
    // an equality check over a ";"-composition, not a law id
    if (peek().kind != Tok::Semi || starts_expression(peek(1))) {
      cur_ = save;
      return "";
    }
    return id;
  }

  Stmt statement() {
    const Token& t = peek();
    if (t.kind != Tok::Keyword)
      fail(t, {"'set'", "'rel'", "'fun'", "'fam'", "'eval'", "'check'", "'assert'"});

    Stmt stmt;
    stmt.pos = t.pos;
    if (t.text == "set" || t.text == "rel" || t.text == "fun" || t.text == "fam") {
      advance();
      std::string name = decl_name();
      expect(Tok::Equal, "'='");
      if (t.text == "set") {
        stmt.kind = StmtKind::SetDecl;
        stmt.payload = set_literal();
      } else if (t.text == "rel") {
        stmt.kind = StmtKind::RelDecl;
        stmt.payload = pair_list();
      } else {
        stmt.kind = (t.text == "fun") ? StmtKind::FunDecl : StmtKind::FamDecl;
        stmt.payload = map_list();
      }
      stmt.name = name;
      declared_[name] = stmt.kind;
      expect(Tok::Semi, "';'");
      return stmt;
    }
    if (t.text == "eval") {
      advance();
      stmt.kind = StmtKind::Eval;
      stmt.a = expression();
      expect(Tok::Semi, "';'");
      return stmt;
    }
    if (t.text == "check") {
      advance();
      std::string law = law_id_or_empty();
      if (!law.empty()) {
        stmt.kind = StmtKind::CheckLaw;
        stmt.law_id = std::move(law);
        expect(Tok::Semi, "';'");
        return stmt;
      }
      stmt.kind = StmtKind::CheckEq;
      stmt.a = expression();
      expect(Tok::Equal, "'='");
      stmt.b = expression();
      expect(Tok::Semi, "';'");
      return stmt;
    }
    if (t.text == "assert") {
      advance();
      stmt.kind = StmtKind::AssertSub;
      stmt.a = expression();
      expect(Tok::SubsetEq, "'⊆'");
      stmt.b = expression();
      expect(Tok::Semi, "';'");
      return stmt;
    }
    fail(t, {"'set'", "'rel'", "'fun'", "'fam'", "'eval'", "'check'", "'assert'"});
  }
};

}  // namespace

ParseError::ParseError(Pos p, std::string off, std::vector<std::string> exp)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << p.line << ":" << p.col << ": unexpected " << off << "; expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) {
          if (i) os << (i + 1 == exp.size() ? " or " : ", ");
          os << exp[i];
        }
        return os.str();
      }()),
      pos(p),
      offending(std::move(off)),
      expected(std::move(exp)) {}

Script parse(std::string_view text) { return Parser(text).run(); }

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  if (a.kind == ExprKind::Literal && a.literal != b.literal) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!equal(*a.args[i], *b.args[i])) return false;
  return true;
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.name != b.name || a.law_id != b.law_id) return false;
  switch (a.kind) {
    case StmtKind::SetDecl:
    case StmtKind::RelDecl:
    case StmtKind::FunDecl:
    case StmtKind::FamDecl:
      if (a.payload != b.payload) return false;
      break;
    default:
      break;
  }
  auto eq_ptr = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return equal(*x, *y);
  };
  return eq_ptr(a.a, b.a) && eq_ptr(a.b, b.b);
}

bool equal(const Script& a, const Script& b) {
  if (a.stmts.size() != b.stmts.size()) return false;
  for (std::size_t i = 0; i < a.stmts.size(); ++i)
    if (!equal(a.stmts[i], b.stmts[i])) return false;
  return true;
}

}  // namespace finrel::dsl
