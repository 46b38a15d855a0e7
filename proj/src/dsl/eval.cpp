#include "finrel/dsl/eval.hpp"

#include <map>
#include <sstream>

#include "finrel/dsl/print.hpp"
#include "finrel/errors.hpp"
#include "finrel/family.hpp"
#include "finrel/function.hpp"
#include "finrel/law.hpp"
#include "finrel/pointfree.hpp"
#include "finrel/relation.hpp"

namespace finrel::dsl {

namespace {

struct EvalError : std::runtime_error {
  EvalError(Pos p, const std::string& msg)
      : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg) {}
};

class Session {
 public:
  explicit Session(const EnumConfig& cfg) : cfg_(cfg) {}

  Trace run(const Script& script) {
    Trace trace;
    for (const Stmt& stmt : script.stmts) {
      TraceEntry entry;
      entry.pos = stmt.pos;
      entry.stmt = print(stmt);
      bool halt = false;
      try {
        execute(stmt, entry, halt);
      } catch (const EvalError& e) {
        entry.status = EntryStatus::Error;
        entry.output = e.what();
        halt = true;
      } catch (const KernelError& e) {
        entry.status = EntryStatus::Error;
        entry.output = std::to_string(stmt.pos.line) + ":" + std::to_string(stmt.pos.col) +
                       ": " + e.what();
        halt = true;
      }
      trace.entries.push_back(std::move(entry));
      if (halt) break;
    }
    return trace;
  }

 private:
  EnumConfig cfg_;
  std::map<std::string, Value> env_;

  void execute(const Stmt& stmt, TraceEntry& entry, bool& halt) {
    switch (stmt.kind) {
      case StmtKind::SetDecl:
      case StmtKind::RelDecl:
      case StmtKind::FunDecl:
      case StmtKind::FamDecl:
        env_[stmt.name] = stmt.payload;
        entry.output = to_string(stmt.payload);
        break;
      case StmtKind::Eval:
        entry.output = to_string(eval(*stmt.a));
        break;
      case StmtKind::CheckLaw: {
        const Law* law = nullptr;
        try {
          law = &find_law(stmt.law_id);
        } catch (const UnknownLaw&) {
          throw EvalError(stmt.pos, "unknown law: " + stmt.law_id);
        }
        const LawReport rep = run_law(stmt.law_id, cfg_);
        const bool as_expected = law->expect_fail ? rep.failed() : rep.passed();
        std::ostringstream os;
        if (rep.outcome == LawReport::Outcome::BudgetExceeded) {
          os << "BUDGET EXCEEDED (estimated " << rep.budget_estimate << ")";
        } else if (rep.passed()) {
          os << (law->expect_fail ? "PASS (unexpected)" : "PASS") << " ("
             << rep.instances_checked << " instances)";
        } else {
          os << (law->expect_fail ? "FAIL (expected)" : "FAIL") << " ("
             << rep.instances_checked << " instances; witness " << rep.counterexample << ")";
        }
        entry.output = os.str();
        entry.status = as_expected ? EntryStatus::Ok : EntryStatus::Failed;
        break;
      }
      case StmtKind::CheckEq: {
        const Value lhs = eval(*stmt.a);
        const Value rhs = eval(*stmt.b);
        if (lhs == rhs) {
          entry.output = "PASS: " + to_string(lhs);
        } else {
          entry.output = "FAIL: " + to_string(lhs) + " != " + to_string(rhs);
          entry.status = EntryStatus::Failed;
        }
        break;
      }
      case StmtKind::AssertSub: {
        const Value lhs = eval(*stmt.a);
        const Value rhs = eval(*stmt.b);
        const VSet ls = need_set(lhs, stmt.a->pos);
        const VSet rs = need_set(rhs, stmt.b->pos);
        for (const Value& v : ls) {
          if (!rs.contains(v)) {
            entry.output = "FAIL: witness " + to_string(v);
            entry.status = EntryStatus::Failed;
            halt = true;
            return;
          }
        }
        entry.output = "OK";
        break;
      }
    }
  }

  [[noreturn]] void type_error(Pos pos, const std::string& msg) {
    throw EvalError(pos, "type error: " + msg);
  }

  VSet need_set(const Value& v, Pos pos) {
    if (!v.is_set()) type_error(pos, "expected a set, got " + to_string(v));
    return v.set_elements();
  }

  Fun need_fun(const Value& v, Pos pos) {
    if (!v.is_function()) type_error(pos, "expected a function, got " + to_string(v));
    return v.fun();
  }

  Rel need_rel(const Value& v, Pos pos) {
    if (!v.is_set()) type_error(pos, "expected a relation, got " + to_string(v));
    Value offender;
    auto r = Rel::from_set(v.set_elements(), &offender);
    if (!r) type_error(pos, "expected a relation; element " + to_string(offender) +
                                " is not a pair");
    return *r;
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Name: {
        auto it = env_.find(e.name);
        if (it == env_.end()) throw EvalError(e.pos, "undefined name: " + e.name);
        return it->second;
      }
      case ExprKind::Literal:
        return e.literal;
      case ExprKind::Dom: {
        const Value v = eval(*e.args[0]);
        if (v.is_function()) return Value::set(v.fun().domain());
        return Value::set(dom(need_rel(v, e.args[0]->pos)));
      }
      case ExprKind::Ran: {
        const Value v = eval(*e.args[0]);
        if (v.is_function()) return Value::set(v.fun().range());
        return Value::set(ran(need_rel(v, e.args[0]->pos)));
      }
      case ExprKind::Id: {
        const Value v = eval(*e.args[0]);
        return Value::set(identity(need_set(v, e.args[0]->pos)).as_set());
      }
      case ExprKind::Converse: {
        const Value v = eval(*e.args[0]);
        return Value::set(converse(need_rel(v, e.args[0]->pos)).as_set());
      }
      case ExprKind::Compose: {
        const Value g = eval(*e.args[0]);
        const Value f = eval(*e.args[1]);
        if (g.is_function() && f.is_function())
          return Value::function(compose_fun(g.fun(), f.fun()));
        const Rel rg = g.is_function() ? graph(g.fun()) : need_rel(g, e.args[0]->pos);
        const Rel rf = f.is_function() ? graph(f.fun()) : need_rel(f, e.args[1]->pos);
        return Value::set(compose(rg, rf).as_set());
      }
      case ExprKind::Intersect: {
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        return Value::set(
            intersection_of(need_set(a, e.args[0]->pos), need_set(b, e.args[1]->pos)));
      }
      case ExprKind::Union: {
        const Value a = eval(*e.args[0]);
        const Value b = eval(*e.args[1]);
        return Value::set(union_of(need_set(a, e.args[0]->pos), need_set(b, e.args[1]->pos)));
      }
      case ExprKind::Prod:
        return Value::set(product(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::DSum:
        return Value::set(disjoint_union(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Transpose:
        return Value::function(transpose(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Uncurry:
        return Value::function(uncurry_family(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Curry:
        return Value::function(curry(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Inverse:
        return Value::function(inverse(need_fun(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Graph:
        return Value::set(graph(need_fun(eval(*e.args[0]), e.args[0]->pos)).as_set());
      case ExprKind::FunOf:
        return Value::function(fun_from_graph(need_rel(eval(*e.args[0]), e.args[0]->pos)));
      case ExprKind::Tab: {
        const auto [f, g] = tabulate(need_rel(eval(*e.args[0]), e.args[0]->pos));
        return Value::pair(Value::function(f), Value::function(g));
      }
      case ExprKind::Pr: {
        const Fun t = need_fun(eval(*e.args[0]), e.args[0]->pos);
        return projections(t).at(eval(*e.args[1]));
      }
      case ExprKind::Inj: {
        const Fun t = need_fun(eval(*e.args[0]), e.args[0]->pos);
        return labelings(t).at(eval(*e.args[1]));
      }
      case ExprKind::Apply:
        return apply(need_fun(eval(*e.args[0]), e.args[0]->pos), eval(*e.args[1]));
      case ExprKind::Space:
        return Value::set(function_space(need_set(eval(*e.args[0]), e.args[0]->pos),
                                         need_set(eval(*e.args[1]), e.args[1]->pos)));
      case ExprKind::PSpace:
        return Value::set(partial_function_space(need_set(eval(*e.args[0]), e.args[0]->pos),
                                                 need_set(eval(*e.args[1]), e.args[1]->pos)));
      case ExprKind::Alpha:
        return Value::function(alpha(need_set(eval(*e.args[0]), e.args[0]->pos),
                                     need_set(eval(*e.args[1]), e.args[1]->pos)));
      case ExprKind::Proxy:
        return Value::function(define_by_proxy(need_fun(eval(*e.args[0]), e.args[0]->pos),
                                               need_fun(eval(*e.args[1]), e.args[1]->pos)));
      case ExprKind::Fork: {
        const Fun rels = need_fun(eval(*e.args[0]), e.args[0]->pos);
        const Fun t = need_fun(eval(*e.args[1]), e.args[1]->pos);
        const VSet s = need_set(eval(*e.args[2]), e.args[2]->pos);
        return Value::set(fork(rels, t, s).as_set());
      }
      case ExprKind::Par: {
        const Fun rels = need_fun(eval(*e.args[0]), e.args[0]->pos);
        const Fun t = need_fun(eval(*e.args[1]), e.args[1]->pos);
        const Fun t2 = need_fun(eval(*e.args[2]), e.args[2]->pos);
        return Value::set(par(rels, t, t2).as_set());
      }
    }
    throw EvalError(e.pos, "unhandled expression");
  }
};

}  // namespace

bool Trace::ok() const {
  for (const auto& e : entries)
    if (e.status != EntryStatus::Ok) return false;
  return true;
}

Trace evaluate(const Script& s, const EnumConfig& cfg) { return Session(cfg).run(s); }

}  // namespace finrel::dsl
