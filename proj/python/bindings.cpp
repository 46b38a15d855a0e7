#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finrel/dsl/eval.hpp"
#include "finrel/dsl/parse.hpp"
#include "finrel/dsl/print.hpp"
#include "finrel/errors.hpp"
#include "finrel/family.hpp"
#include "finrel/function.hpp"
#include "finrel/law.hpp"
#include "finrel/pointfree.hpp"
#include "finrel/relation.hpp"

namespace py = pybind11;
using namespace finrel;

namespace {

// Sets and relations cross the boundary as set values; only Value and Fun
// are distinct python types.
VSet as_vset(const Value& v) {
  if (!v.is_set()) throw py::type_error("expected a set value");
  return v.set_elements();
}

Rel as_rel(const Value& v) {
  Value offender;
  auto r = Rel::from_set(as_vset(v), &offender);
  if (!r) throw py::type_error("expected a relation; " + to_string(offender) + " is not a pair");
  return *r;
}

Value from_rel(const Rel& r) { return Value::set(r.as_set()); }
Value from_vset(const VSet& s) { return Value::set(s); }

EnumConfig make_config(int max_carrier, const std::string& mode, std::uint64_t samples,
                       std::uint64_t seed, int jobs) {
  EnumConfig cfg;
  cfg.max_carrier = max_carrier;
  cfg.mode = mode == "sampled" ? EnumMode::Sampled : EnumMode::Exhaustive;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.jobs = jobs;
  return cfg;
}

py::dict report_dict(const LawReport& rep) {
  py::dict d;
  d["id"] = rep.id;
  d["instances"] = rep.instances_checked;
  d["outcome"] = to_string(rep.outcome);
  if (rep.outcome == LawReport::Outcome::Fail) d["counterexample"] = rep.counterexample;
  if (rep.outcome == LawReport::Outcome::BudgetExceeded)
    d["budget_estimate"] = rep.budget_estimate;
  if (!rep.detail.empty()) d["detail"] = rep.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite relations, functions, families and their laws";

  py::register_exception<KernelError>(m, "KernelError");

  py::class_<Value>(m, "Value")
      .def("__repr__", [](const Value& v) { return to_string(v); })
      .def("__eq__", [](const Value& a, const Value& b) { return a == b; })
      .def("__ne__", [](const Value& a, const Value& b) { return a != b; })
      .def("__lt__", [](const Value& a, const Value& b) { return compare(a, b) < 0; })
      .def("__hash__", [](const Value& v) { return py::hash(py::str(to_string(v))); })
      .def_property_readonly("is_atom", &Value::is_atom)
      .def_property_readonly("is_pair", &Value::is_pair)
      .def_property_readonly("is_set", &Value::is_set)
      .def_property_readonly("is_function", &Value::is_function)
      .def_property_readonly("first", [](const Value& v) {
        if (!v.is_pair()) throw py::type_error("not a pair");
        return v.first();
      })
      .def_property_readonly("second", [](const Value& v) {
        if (!v.is_pair()) throw py::type_error("not a pair");
        return v.second();
      })
      .def("elements", [](const Value& v) {
        return as_vset(v).elements();
      })
      .def("to_fun", [](const Value& v) {
        if (!v.is_function()) throw py::type_error("not a function value");
        return v.fun();
      });

  py::class_<Fun>(m, "Fun")
      .def("__repr__", [](const Fun& f) { return to_string(f); })
      .def("__eq__", [](const Fun& a, const Fun& b) { return a == b; })
      .def("__ne__", [](const Fun& a, const Fun& b) { return a != b; })
      .def("__len__", &Fun::size)
      .def("__call__", [](const Fun& f, const Value& x) { return apply(f, x); })
      .def("__hash__", [](const Fun& f) { return py::hash(py::str(to_string(f))); })
      .def_property_readonly("domain", [](const Fun& f) { return from_vset(f.domain()); })
      .def_property_readonly("range", [](const Fun& f) { return from_vset(f.range()); })
      .def("entries", &Fun::entries)
      .def("as_value", [](const Fun& f) { return Value::function(f); });

  // constructors
  m.def("atom", [](std::int64_t n) { return Value::atom(n); });
  m.def("atom", [](const std::string& s) { return Value::atom(s); });
  m.def("pair", &Value::pair);
  m.def("vset", [](const std::vector<Value>& vs) { return from_vset(VSet(vs)); });
  m.def("fun", [](const std::vector<std::pair<Value, Value>>& entries) {
    return Fun::from_entries(entries);
  });
  m.def("tuple_of", &tuple_of);

  // sets and relations
  m.def("cartesian",
        [](const Value& x, const Value& y) { return from_vset(cartesian(as_vset(x), as_vset(y))); });
  m.def("member", [](const Value& v, const Value& s) { return as_vset(s).contains(v); });
  m.def("subset", [](const Value& a, const Value& b) { return as_vset(a).subset_of(as_vset(b)); });
  m.def("union_of",
        [](const Value& a, const Value& b) { return from_vset(union_of(as_vset(a), as_vset(b))); });
  m.def("intersection_of", [](const Value& a, const Value& b) {
    return from_vset(intersection_of(as_vset(a), as_vset(b)));
  });
  m.def("difference_of", [](const Value& a, const Value& b) {
    return from_vset(difference_of(as_vset(a), as_vset(b)));
  });

  m.def("dom", [](const Value& r) { return from_vset(dom(as_rel(r))); });
  m.def("ran", [](const Value& r) { return from_vset(ran(as_rel(r))); });
  m.def("compose",
        [](const Value& s, const Value& r) { return from_rel(compose(as_rel(s), as_rel(r))); });
  m.def("converse", [](const Value& r) { return from_rel(converse(as_rel(r))); });
  m.def("identity", [](const Value& a) { return from_rel(identity(as_vset(a))); });
  m.def("holds", [](const Value& r, const Value& x, const Value& y) {
    return as_rel(r).holds(x, y);
  });
  m.def("restrict_dom",
        [](const Value& r, const Value& a) { return from_rel(restrict_dom(as_rel(r), as_vset(a))); });
  m.def("is_relation_from", [](const Value& r, const Value& x, const Value& y) {
    return is_relation_from(as_rel(r), as_vset(x), as_vset(y));
  });
  m.def("is_relation_from_product", [](const Value& r, const Value& x, const Value& y) {
    return is_relation_from_product(as_rel(r), as_vset(x), as_vset(y));
  });
  m.def("is_functional", [](const Value& r) { return is_functional(as_rel(r)); });

  // functions
  m.def("fun_from_graph", [](const Value& r) { return fun_from_graph(as_rel(r)); });
  m.def("graph", [](const Fun& f) { return from_rel(graph(f)); });
  m.def("apply", &apply);
  m.def("compose_fun", &compose_fun);
  m.def("identity_fun", [](const Value& a) { return identity_fun(as_vset(a)); });
  m.def("inverse", &inverse);
  m.def("define_by_proxy", &define_by_proxy);
  m.def("is_fun_from", [](const Fun& f, const Value& x, const Value& y) {
    return is_fun_from(f, as_vset(x), as_vset(y));
  });
  m.def("is_onto", [](const Fun& f, const Value& y) { return is_onto(f, as_vset(y)); });
  m.def("is_total_on", [](const Fun& f, const Value& x) { return is_total_on(f, as_vset(x)); });
  m.def("is_partial_on", [](const Fun& f, const Value& x) { return is_partial_on(f, as_vset(x)); });
  m.def("is_injective", &is_injective);
  m.def("spec_check", [](const Fun& f, const Value& x, const Value& y,
                         const std::function<bool(const Value&, const Value&)>& pred) {
    return spec_check(f, as_vset(x), as_vset(y), pred);
  });

  // families, products, sums, currying
  m.def("product", [](const Fun& t) { return from_vset(product(t)); });
  m.def("projections", &projections);
  m.def("transpose", &transpose);
  m.def("disjoint_union", [](const Fun& t) { return from_vset(disjoint_union(t)); });
  m.def("labelings", &labelings);
  m.def("curry", &curry);
  m.def("uncurry_family", &uncurry_family);
  m.def("function_space", [](const Value& x, const Value& y) {
    return from_vset(function_space(as_vset(x), as_vset(y)));
  });
  m.def("partial_function_space", [](const Value& x, const Value& y) {
    return from_vset(partial_function_space(as_vset(x), as_vset(y)));
  });
  m.def("alpha", [](const Value& y, const Value& z) { return alpha(as_vset(y), as_vset(z)); });
  m.def("pair_parallel", &pair_parallel);

  // point-free constructions
  m.def("fork", [](const Fun& rels, const Fun& t, const Value& s) {
    return from_rel(fork(rels, t, as_vset(s)));
  });
  m.def("fork_pointfree", [](const Fun& rels, const Fun& t, const Value& s) {
    return from_rel(fork_pointfree(rels, t, as_vset(s)));
  });
  m.def("par", [](const Fun& rels, const Fun& t, const Fun& t2) {
    return from_rel(par(rels, t, t2));
  });
  m.def("par_pointfree", [](const Fun& rels, const Fun& t, const Fun& t2) {
    return from_rel(par_pointfree(rels, t, t2));
  });
  m.def("tabulate", [](const Value& r) { return tabulate(as_rel(r)); });
  m.def("check_product_universal", [](const Fun& t, const Value& s, std::uint64_t budget) {
    return report_dict(check_product_universal(t, as_vset(s), budget));
  }, py::arg("t"), py::arg("s"), py::arg("budget") = 1'000'000);
  m.def("check_sum_universal", [](const Fun& t, const Value& s, std::uint64_t budget) {
    return report_dict(check_sum_universal(t, as_vset(s), budget));
  }, py::arg("t"), py::arg("s"), py::arg("budget") = 1'000'000);
  m.def("check_product_candidate", [](const Fun& gamma, const Value& c, const Fun& t) {
    return report_dict(check_product_candidate(gamma, as_vset(c), t));
  });
  m.def("check_sum_candidate", [](const Fun& delta, const Value& d, const Fun& t) {
    return report_dict(check_sum_candidate(delta, as_vset(d), t));
  });

  // law engine
  m.def("law_ids", &law_ids);
  m.def("laws", [] {
    py::list out;
    for (const auto& law : law_catalog()) {
      py::dict d;
      d["id"] = law.id;
      d["anchor"] = law.statement;
      d["expected"] = law.expect_fail ? "fail" : "pass";
      out.append(std::move(d));
    }
    return out;
  });
  m.def(
      "run_law",
      [](const std::string& id, int max_carrier, const std::string& mode,
         std::uint64_t samples, std::uint64_t seed, int jobs) {
        return report_dict(run_law(id, make_config(max_carrier, mode, samples, seed, jobs)));
      },
      py::arg("id"), py::arg("max_carrier") = 2, py::arg("mode") = "exhaustive",
      py::arg("samples") = 50, py::arg("seed") = EnumConfig::kDefaultSeed, py::arg("jobs") = 1);
  m.def(
      "run_suite",
      [](const std::vector<std::string>& ids, int max_carrier, const std::string& mode,
         std::uint64_t samples, std::uint64_t seed, int jobs) {
        py::list out;
        const auto cfg = make_config(max_carrier, mode, samples, seed, jobs);
        for (const auto& rep : run_suite(ids.empty() ? law_ids() : ids, cfg))
          out.append(report_dict(rep));
        return out;
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("max_carrier") = 2,
      py::arg("mode") = "exhaustive", py::arg("samples") = 50,
      py::arg("seed") = EnumConfig::kDefaultSeed, py::arg("jobs") = 1);

  // the script language
  m.def("format_script", [](const std::string& text) {
    return dsl::print(dsl::parse(text));
  });
  m.def(
      "run_script",
      [](const std::string& text, int max_carrier, const std::string& mode,
         std::uint64_t samples, std::uint64_t seed, int jobs) {
        const auto script = dsl::parse(text);
        const auto trace =
            dsl::evaluate(script, make_config(max_carrier, mode, samples, seed, jobs));
        py::list out;
        for (const auto& entry : trace.entries) {
          py::dict d;
          d["line"] = entry.pos.line;
          d["col"] = entry.pos.col;
          d["stmt"] = entry.stmt;
          d["output"] = entry.output;
          d["status"] = entry.status == dsl::EntryStatus::Ok       ? "ok"
                        : entry.status == dsl::EntryStatus::Failed ? "failed"
                                                                   : "error";
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("text"), py::arg("max_carrier") = 2, py::arg("mode") = "exhaustive",
      py::arg("samples") = 50, py::arg("seed") = EnumConfig::kDefaultSeed, py::arg("jobs") = 1);
}
