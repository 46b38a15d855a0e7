// Acceptance suite: runs every criterion at its stated bound and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: finrel_acceptance --cli <path-to-finrel> --fixtures <fixtures-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "finrel/dsl/parse.hpp"
#include "finrel/dsl/print.hpp"
#include "finrel/family.hpp"
#include "finrel/function.hpp"
#include "finrel/law.hpp"
#include "finrel/pointfree.hpp"
#include "finrel/relation.hpp"
#include "support/oracles.hpp"

using namespace finrel;
using oracles::all_partial_functions;
using oracles::all_relations;
using oracles::all_set_families;
using oracles::all_subsets;
using oracles::all_total_functions;
using oracles::atoms;

namespace {

std::string g_cli;
std::string g_fixtures;

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

Value A(const char* s) { return Value::atom(s); }
Value A(int n) { return Value::atom(static_cast<std::int64_t>(n)); }
const Value ai = A("i");
const Value aj = A("j");

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  CliResult res;
  const std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "cannot spawn " + cmd);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// every family f with f_i drawn from choices[i], as explicit Fun values
std::vector<Fun> families_from(const std::vector<Value>& index,
                               const std::vector<std::vector<Fun>>& choices) {
  std::vector<std::vector<Value>> vals(choices.size());
  for (std::size_t k = 0; k < choices.size(); ++k)
    vals[k] = oracles::fun_values(choices[k]);
  return oracles::all_families(index, vals);
}

// ---- criteria ------------------------------------------------------------

void crit1_def3_def5(std::ostringstream& note) {
  const auto start = std::chrono::steady_clock::now();
  const auto pool = atoms({"a", "b", "c"});
  const VSet p(pool);
  const auto rels = all_relations(p, p);
  require(rels.size() == 512, "expected 512 relations over a 3x3 carrier");
  std::uint64_t checked = 0;
  for (const Rel& r : rels)
    for (const VSet& x : all_subsets(pool))
      for (const VSet& y : all_subsets(pool)) {
        require(is_relation_from(r, x, y) == is_relation_from_product(r, x, y),
                "evaluator disagreement at R=" + to_string(r) + " X=" + to_string(x) +
                    " Y=" + to_string(y));
        ++checked;
      }
  const double secs = seconds_since(start);
  require(secs < 5.0, "took too long: " + std::to_string(secs) + "s");
  note << checked << " instances, " << secs << "s";
}

void crit2_functionality(std::ostringstream& note) {
  const VSet p(atoms({"a", "b", "c"}));
  std::uint64_t checked = 0;
  for (const Rel& r : all_relations(p, p)) {
    require(is_functional(r) == (compose(r, converse(r)) == identity(ran(r))),
            "criterion mismatch at R=" + to_string(r));
    ++checked;
  }
  note << checked << " relations";
}

void crit3_equality(std::ostringstream& note) {
  const VSet p(atoms({"a", "b", "c"}));
  const auto funs = all_partial_functions(p, p);
  require(funs.size() == 64, "expected 64 functions inside a 3x3 carrier");
  std::uint64_t checked = 0;
  for (const Fun& f : funs)
    for (const Fun& g : funs) {
      bool same = f.domain() == g.domain();
      if (same)
        for (const auto& [x, fx] : f.entries())
          if (g.at(x) != fx) {
            same = false;
            break;
          }
      require((f == g) == same, "equality mismatch at f=" + to_string(f) +
                                    " g=" + to_string(g));
      ++checked;
    }
  note << checked << " pairs";
}

void crit4_composition(std::ostringstream& note) {
  const VSet p(atoms({"a", "b"}));
  const auto funs = all_partial_functions(p, p);
  std::uint64_t checked = 0;
  for (const Fun& g : funs)
    for (const Fun& f : funs) {
      require(compose_fun(g, f) == fun_from_graph(compose(graph(g), graph(f))),
              "composition routes disagree at g=" + to_string(g) + " f=" + to_string(f));
      ++checked;
    }
  note << checked << " pairs";
}

void crit5_product_universal(std::ostringstream& note) {
  const auto start = std::chrono::steady_clock::now();
  const auto member_pool = atoms({"0", "1"});
  const auto source_pool = atoms({"s", "t"});
  std::uint64_t families_checked = 0;

  for (int isize = 0; isize <= 2; ++isize) {
    const std::vector<Value> both = {ai, aj};
    const std::vector<Value> index(both.begin(), both.begin() + isize);
    for (const Fun& t : all_set_families(index, member_pool, true)) {
      const VSet tuples = product(t);
      const Fun prs = projections(t);
      for (const VSet& s : all_subsets(source_pool)) {
        const auto candidates = all_total_functions(s, tuples);
        std::vector<std::vector<Fun>> choices;
        for (const auto& [idx, v] : t.entries())
          choices.push_back(all_total_functions(s, v.set_elements()));
        for (const Fun& fam : families_from(index, choices)) {
          // the mediating map, built pointwise
          std::vector<std::pair<Value, Value>> entries;
          for (const Value& src : s) {
            std::vector<std::pair<Value, Value>> tup;
            for (const auto& [idx, fi] : fam.entries()) tup.emplace_back(idx, fi.fun().at(src));
            entries.emplace_back(src, Value::function(Fun::from_entries(std::move(tup))));
          }
          const Fun expected = Fun::from_entries(std::move(entries));

          std::uint64_t solutions = 0;
          bool expected_solves = false;
          for (const Fun& g : candidates) {
            bool ok = true;
            for (const auto& [idx, fi] : fam.entries())
              if (compose_fun(prs.at(idx).fun(), g) != fi.fun()) {
                ok = false;
                break;
              }
            if (ok) {
              ++solutions;
              if (g == expected) expected_solves = true;
            }
          }
          require(solutions == 1 && expected_solves,
                  "mediating map not unique at T=" + to_string(t) + " S=" + to_string(s) +
                      " f=" + to_string(fam) + " (solutions=" + std::to_string(solutions) + ")");
          if (!fam.empty())
            require(transpose(fam) == expected, "transpose disagrees at f=" + to_string(fam));
          ++families_checked;
        }
      }
      if (!t.empty())
        require(transpose(prs) == identity_fun(tuples),
                "transpose of projections is not the identity at T=" + to_string(t));
      // cross-check the library's own checker against this brute force
      require(check_product_universal(t, VSet(std::vector<Value>(source_pool))).passed(),
              "check_product_universal disagrees at T=" + to_string(t));
    }
  }
  const double secs = seconds_since(start);
  require(secs < 30.0, "took too long: " + std::to_string(secs) + "s");
  note << families_checked << " families, " << secs << "s";
}

void crit6_sum_universal(std::ostringstream& note) {
  const auto member_pool = atoms({"0", "1"});
  const auto source_pool = atoms({"s", "t"});
  std::uint64_t families_checked = 0;

  for (int isize = 0; isize <= 2; ++isize) {
    const std::vector<Value> both = {ai, aj};
    const std::vector<Value> index(both.begin(), both.begin() + isize);
    for (const Fun& t : all_set_families(index, member_pool, true)) {
      const VSet labeled = disjoint_union(t);
      const Fun labs = labelings(t);
      require(uncurry_family(labs) == identity_fun(labeled),
              "uncurried labelings are not the identity at T=" + to_string(t));
      for (const VSet& s : all_subsets(source_pool)) {
        const auto candidates = all_total_functions(labeled, s);
        std::vector<std::vector<Fun>> choices;
        for (const auto& [idx, v] : t.entries())
          choices.push_back(all_total_functions(v.set_elements(), s));
        for (const Fun& fam : families_from(index, choices)) {
          const Fun expected = uncurry_family(fam);
          std::uint64_t solutions = 0;
          bool expected_solves = false;
          for (const Fun& g : candidates) {
            bool ok = true;
            for (const auto& [idx, fi] : fam.entries())
              if (compose_fun(g, labs.at(idx).fun()) != fi.fun()) {
                ok = false;
                break;
              }
            if (ok) {
              ++solutions;
              if (g == expected) expected_solves = true;
            }
          }
          require(solutions == 1 && expected_solves,
                  "sum mediating map not unique at T=" + to_string(t) + " S=" + to_string(s) +
                      " f=" + to_string(fam));
          ++families_checked;
        }
      }
      require(check_sum_universal(t, VSet(std::vector<Value>(source_pool))).passed(),
              "check_sum_universal disagrees at T=" + to_string(t));
    }
  }
  note << families_checked << " families";
}

void crit7_candidates(std::ostringstream& note) {
  const Fun t = Fun::from_entries(
      {{ai, Value::set(VSet({A(1), A(2)}))}, {aj, Value::set(VSet({A("u")}))}});
  const VSet tuples = product(t);

  // product side: relabel through an arbitrary bijection
  const VSet c({A("c0"), A("c1")});
  const Fun b = Fun::from_entries(
      {{A("c0"), tuples.elements()[1]}, {A("c1"), tuples.elements()[0]}});
  std::vector<std::pair<Value, Value>> gamma_entries;
  const Fun prs_for_gamma = projections(t);
  for (const auto& [idx, pr] : prs_for_gamma.entries())
    gamma_entries.emplace_back(idx, Value::function(compose_fun(pr.fun(), b)));
  const Fun gamma = Fun::from_entries(std::move(gamma_entries));
  const LawReport prod_rep = check_product_candidate(gamma, c, t);
  require(prod_rep.passed(), "relabeled product candidate rejected");
  require(prod_rep.detail.find("inverse") != std::string::npos, "no inverse exhibited");
  require(transpose(gamma) == b, "bijection not recovered");
  const Fun h = inverse(transpose(gamma));
  require(compose_fun(h, transpose(gamma)) == identity_fun(c), "h is not a left inverse");
  require(compose_fun(transpose(gamma), h) == identity_fun(tuples),
          "h is not a right inverse");

  const Fun collapsed = Fun::from_entries({
      {ai, Value::function(Fun::from_entries({{A("c0"), A(1)}, {A("c1"), A(1)}}))},
      {aj, Value::function(Fun::from_entries({{A("c0"), A("u")}, {A("c1"), A("u")}}))},
  });
  const LawReport bad = check_product_candidate(collapsed, c, t);
  require(bad.failed() && !bad.counterexample.empty(),
          "collapsed product candidate not rejected with a witness");

  // sum side
  const VSet labeled = disjoint_union(t);
  const VSet d({A("d0"), A("d1"), A("d2")});
  std::vector<std::pair<Value, Value>> b2_entries;
  for (std::size_t k = 0; k < labeled.size(); ++k)
    b2_entries.emplace_back(labeled.elements()[k], d.elements()[(k + 2) % d.size()]);
  const Fun b2 = Fun::from_entries(std::move(b2_entries));
  std::vector<std::pair<Value, Value>> delta_entries;
  const Fun labs_for_delta = labelings(t);
  for (const auto& [idx, lab] : labs_for_delta.entries())
    delta_entries.emplace_back(idx, Value::function(compose_fun(b2, lab.fun())));
  const Fun delta = Fun::from_entries(std::move(delta_entries));
  const LawReport sum_rep = check_sum_candidate(delta, d, t);
  require(sum_rep.passed(), "relabeled sum candidate rejected");
  require(uncurry_family(delta) == b2, "sum bijection not recovered");

  const Fun sum_collapsed = Fun::from_entries({
      {ai, Value::function(Fun::from_entries({{A(1), A("d0")}, {A(2), A("d0")}}))},
      {aj, Value::function(Fun::from_entries({{A("u"), A("d1")}}))},
  });
  const LawReport sum_bad = check_sum_candidate(sum_collapsed, d, t);
  require(sum_bad.failed(), "collapsed sum candidate not rejected");
  note << "bijections recovered, collapses rejected";
}

void crit8_curry(std::ostringstream& note) {
  const Fun f = Fun::from_entries({{Value::pair(A(0), A(5)), A("p")},
                                   {Value::pair(A(3), A(1)), A("q")},
                                   {Value::pair(A(3), A(2)), A("r")}});
  const Fun fc = curry(f);
  require(fc.domain() == VSet({A(0), A(3)}), "dom of the curried form is wrong");
  require(fc.at(A(3)).fun().domain() == VSet({A(1), A(2)}), "inner domain is wrong");
  require(apply(fc.at(A(3)).fun(), A(2)) == f.at(Value::pair(A(3), A(2))),
          "curried application disagrees with the table");

  const VSet p(atoms({"a", "b"}));
  std::uint64_t checked = 0;
  for (const Fun& g : all_partial_functions(cartesian(p, p), p)) {
    require(uncurry_family(curry(g)) == g, "curry round trip fails at " + to_string(g));
    ++checked;
  }

  const Fun with_empty =
      Fun::from_entries({{ai, Value::function(Fun())}});  // ran F contains an empty function
  require(uncurry_family(with_empty).empty(), "uncurried empty member is not empty");
  require(curry(uncurry_family(with_empty)) != with_empty,
          "the empty-member witness unexpectedly round-trips");
  note << "worked example + " << checked << " round trips + stored witness";
}

void crit9_alpha(std::ostringstream& note) {
  const auto pool = atoms({"a", "b"});
  const auto out_pool = atoms({"u", "v"});
  const auto mid_pool = atoms({"1", "2"});
  std::uint64_t checked = 0;
  for (const VSet& x : all_subsets(pool))
    for (const VSet& y : all_subsets(mid_pool))
      for (const VSet& z : all_subsets(out_pool)) {
        const Fun ev = alpha(y, z);
        const Fun idy = identity_fun(y);
        for (const Fun& f : all_total_functions(cartesian(x, y), z)) {
          const Fun fc = curry(f);
          require(compose_fun(ev, pair_parallel(fc, idy)) == f,
                  "factorization fails at f=" + to_string(f));
          ++checked;
          if (y.empty() && !x.empty()) continue;  // degenerate corner: factor not unique
          for (const Value& hv : function_space(x, function_space(y, z))) {
            const Fun& h = hv.fun();
            require((h == fc) ==
                        (compose_fun(ev, pair_parallel(h, idy)) == f),
                    "uniqueness fails at f=" + to_string(f) + " h=" + to_string(h));
          }
        }
      }
  note << checked << " functions";
}

void crit10_fork_par_tab(std::ostringstream& note) {
  const auto pool = atoms({"a", "b"});
  std::uint64_t fork_checked = 0;
  for (const VSet& s : all_subsets(pool)) {
    for (const Fun& t : all_set_families({ai, aj}, pool, false)) {
      const Fun prs = projections(t);
      for (const Rel& ra : all_relations(s, t.at(ai).set_elements()))
        for (const Rel& rb : all_relations(s, t.at(aj).set_elements())) {
          const Fun rels = Fun::from_entries(
              {{ai, Value::set(ra.as_set())}, {aj, Value::set(rb.as_set())}});
          const Rel forked = fork(rels, t, s);
          require(forked == fork_pointfree(rels, t, s),
                  "fork pointwise/point-free mismatch");
          const Rel after_i = compose(graph(prs.at(ai).fun()), forked);
          const Rel after_j = compose(graph(prs.at(aj).fun()), forked);
          require(difference_of(after_i, ra).empty(), "projection escapes member i");
          require(difference_of(after_j, rb).empty(), "projection escapes member j");
          if (dom(ra) == dom(rb)) {
            require(after_i == ra && after_j == rb, "sharp equality fails");
          }
          ++fork_checked;
        }
    }
  }

  // stored witness: strict inclusion under unequal member domains
  {
    const VSet s({A("s"), A("t")});
    const Fun t = Fun::from_entries(
        {{ai, Value::set(VSet({A(0)}))}, {aj, Value::set(VSet({A(1)}))}});
    const Fun rels = Fun::from_entries(
        {{ai, Value::set(Rel({{A("s"), A(0)}, {A("t"), A(0)}}).as_set())},
         {aj, Value::set(Rel({{A("s"), A(1)}}).as_set())}});
    const Rel after = compose(graph(projections(t).at(ai).fun()), fork(rels, t, s));
    const Rel ri = Rel({{A("s"), A(0)}, {A("t"), A(0)}});
    require(difference_of(after, ri).empty() && after != ri,
            "strict-inclusion witness does not hold");
  }

  std::uint64_t par_checked = 0;
  for (const Fun& t : all_set_families({ai, aj}, pool, false))
    for (const Fun& t2 : all_set_families({ai, aj}, pool, false))
      for (const Rel& ra : all_relations(t.at(ai).set_elements(), t2.at(ai).set_elements()))
        for (const Rel& rb :
             all_relations(t.at(aj).set_elements(), t2.at(aj).set_elements())) {
          const Fun rels = Fun::from_entries(
              {{ai, Value::set(ra.as_set())}, {aj, Value::set(rb.as_set())}});
          require(par(rels, t, t2) == par_pointfree(rels, t, t2),
                  "par pointwise/point-free mismatch");
          ++par_checked;
        }

  const VSet p3(atoms({"a", "b", "c"}));
  std::uint64_t tab_checked = 0;
  for (const Rel& r : all_relations(p3, p3)) {
    const auto [f, g] = tabulate(r);
    require(compose(graph(g), converse(graph(f))) == r, "tabulation does not rebuild R");
    require(intersection_of(compose(converse(graph(f)), graph(f)),
                            compose(converse(graph(g)), graph(g))) == identity(r.as_set()),
            "joint injectivity law fails");
    ++tab_checked;
  }
  note << fork_checked << " forks, " << par_checked << " pars, " << tab_checked
       << " tabulations";
}

void crit11_counting(std::ostringstream& note) {
  const auto pool = atoms({"a", "b", "c"});
  for (const VSet& x : all_subsets(pool))
    for (const VSet& y : all_subsets(pool)) {
      require(function_space(x, y).size() == ipow(y.size(), x.size()),
              "|X->Y| is off at X=" + to_string(x) + " Y=" + to_string(y));
      require(partial_function_space(x, y).size() == ipow(y.size() + 1, x.size()),
              "|X partial-> Y| is off at X=" + to_string(x) + " Y=" + to_string(y));
    }
  std::uint64_t fams = 0;
  for (const Fun& t : all_set_families({ai, aj}, pool, false)) {
    std::uint64_t prod_size = 1, sum_size = 0;
    for (const auto& [idx, v] : t.entries()) {
      prod_size *= v.set_elements().size();
      sum_size += v.set_elements().size();
    }
    require(product(t).size() == prod_size, "|product| is off at T=" + to_string(t));
    require(disjoint_union(t).size() == sum_size, "|dsum| is off at T=" + to_string(t));
    ++fams;
  }
  note << "64 carrier pairs, " << fams << " families";
}

void crit12_expected_fail(std::ostringstream& note) {
  const LawReport rep = run_law("rel.codomain-not-attribute", EnumConfig::defaults());
  require(rep.failed(), "the refutation law unexpectedly passed");

  // re-derive a witness of the documented shape with an independent search
  const auto pool = atoms({"a", "b"});
  const VSet p(pool);
  bool found = false;
  for (const Rel& r : all_relations(p, p)) {
    if (r.empty()) continue;
    for (const VSet& y : all_subsets(pool))
      for (const VSet& yp : all_subsets(pool)) {
        if (is_relation_from(r, dom(r), y) && is_relation_from(r, dom(r), yp) &&
            y.subset_of(yp) && y != yp) {
          found = true;
        }
      }
  }
  require(found, "no witness of the documented shape exists");
  require(rep.counterexample.find("Y' = ") != std::string::npos,
          "witness does not name the two carriers");

  const CliResult cli = run_cli("check rel.codomain-not-attribute");
  require(cli.exit_code == 0, "expected-fail law poisoned the exit code");
  require(cli.output.find("FAIL (expected)") != std::string::npos,
          "expected-fail verdict not printed");
  note << "witness " << rep.counterexample;
}

void crit13_dsl_cli(std::ostringstream& note) {
  // corpus round trip
  {
    const CliResult cat = run_cli("run " + g_fixtures + "/corpus.frs");
    require(cat.exit_code == 0, "corpus run exited " + std::to_string(cat.exit_code));
  }
  {
    std::ifstream in(g_fixtures + "/corpus.frs", std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    const auto first = dsl::parse(os.str());
    require(first.stmts.size() >= 50, "corpus is too small");
    const std::string printed = dsl::print(first);
    require(dsl::equal(first, dsl::parse(printed)), "print/parse round trip fails");
  }

  // the three exit-code paths, end to end
  const CliResult good = run_cli("run " + g_fixtures + "/curry_example.frs");
  require(good.exit_code == 0 && good.output.find("{0, 3}") != std::string::npos,
          "curry example run is wrong: " + good.output);
  const CliResult failed = run_cli("run " + g_fixtures + "/bad_assert.frs");
  require(failed.exit_code == 1 && failed.output.find("witness") != std::string::npos,
          "failing assert did not exit 1 with a witness");
  const CliResult syntax = run_cli("run " + g_fixtures + "/syntax_error.frs");
  require(syntax.exit_code == 2 && syntax.output.find("1:13") != std::string::npos,
          "syntax error did not exit 2 with a position");

  // byte-identical machine output across repeats and across worker counts
  const CliResult j1 = run_cli("check --json --jobs 1");
  const CliResult j2 = run_cli("check --json --jobs 1");
  const CliResult j4 = run_cli("check --json --jobs 4");
  require(j1.exit_code == 0, "check --json exited nonzero");
  require(j1.output == j2.output, "repeated --json runs differ");
  require(j1.output == j4.output, "--jobs changed --json output bytes");
  const CliResult r1 = run_cli("run --json " + g_fixtures + "/corpus.frs");
  const CliResult r2 = run_cli("run --json " + g_fixtures + "/corpus.frs");
  require(r1.output == r2.output, "repeated run --json outputs differ");
  note << "round trip, exit codes 0/1/2, byte-identical --json";
}

void crit14_full_suite(std::ostringstream& note) {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_suite(law_ids(), EnumConfig::defaults());
  for (const auto& rep : reports) {
    const Law& law = find_law(rep.id);
    if (law.expect_fail)
      require(rep.failed(), rep.id + " unexpectedly passed");
    else
      require(rep.passed(), rep.id + " failed: " + rep.counterexample);
  }
  const CliResult cli = run_cli("check all");
  require(cli.exit_code == 0, "check all exited " + std::to_string(cli.exit_code));
  const double secs = seconds_since(start);
  require(secs < 60.0, "took too long: " + std::to_string(secs) + "s");
  note << reports.size() << " laws, " << secs << "s";
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k + 1 < argc; ++k) {
    const std::string flag = argv[k];
    if (flag == "--cli") g_cli = argv[k + 1];
    if (flag == "--fixtures") g_fixtures = argv[k + 1];
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::cerr << "usage: finrel_acceptance --cli <finrel> --fixtures <dir>\n";
    return 2;
  }

  const std::vector<Criterion> criteria = {
      {"relation-from evaluators agree on the 512-relation space", crit1_def3_def5},
      {"functionality criterion agrees pointwise and point-free", crit2_functionality},
      {"function equality is domain plus pointwise agreement", crit3_equality},
      {"both composition routes agree on every function pair", crit4_composition},
      {"product universal property, brute force", crit5_product_universal},
      {"sum universal property, brute force", crit6_sum_universal},
      {"candidate checkers recover bijections and reject collapses", crit7_candidates},
      {"currying: worked example, round trip, empty-member witness", crit8_curry},
      {"evaluation factorization and its uniqueness", crit9_alpha},
      {"fork, parallel and tabulation laws", crit10_fork_par_tab},
      {"counting oracles for spaces, products and sums", crit11_counting},
      {"the codomain refutation fails as expected, exit stays 0", crit12_expected_fail},
      {"script language and CLI end to end", crit13_dsl_cli},
      {"full default suite inside its time budget", crit14_full_suite},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::ostringstream note;
    try {
      criteria[k].run(note);
      std::cout << "PASS  " << (k + 1) << ". " << criteria[k].name;
      if (!note.str().empty()) std::cout << " (" << note.str() << ")";
      std::cout << "\n";
    } catch (const std::exception& e) {
      std::cout << "FAIL  " << (k + 1) << ". " << criteria[k].name << ": " << e.what() << "\n";
      ++failures;
    }
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures ? 1 : 0;
}
