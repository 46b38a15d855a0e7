#include "finrel/pointfree.hpp"

#include <limits>
#include <vector>

#include "finrel/errors.hpp"

namespace finrel {

Rel rel_at(const Fun& rels, const Value& i) {
  const Value& v = rels.at(i);
  if (!v.is_set()) throw CarrierMismatch(i, "family value is not a relation");
  Value offender;
  auto r = Rel::from_set(v.set_elements(), &offender);
  if (!r) throw CarrierMismatch(i, "contains non-pair " + to_string(offender));
  return *r;
}

namespace {

// dom rels = dom t, nonempty, and each rels_i a relation from src_of(i) to
// tgt_of(i); returns the relations in index order.
std::vector<std::pair<Value, Rel>> checked_rel_family(
    const Fun& rels, const Fun& t,
    const std::function<VSet(const Value&)>& src_of,
    const std::function<VSet(const Value&)>& tgt_of) {
  if (rels.empty()) throw EmptyIndex();
  if (rels.domain() != t.domain()) {
    const VSet diff = union_of(difference_of(rels.domain(), t.domain()),
                               difference_of(t.domain(), rels.domain()));
    throw CarrierMismatch(diff.elements().front(), "index sets differ");
  }
  std::vector<std::pair<Value, Rel>> out;
  out.reserve(rels.size());
  for (const auto& [i, v] : rels.entries()) {
    Rel r = rel_at(rels, i);
    if (!is_relation_from(r, src_of(i), tgt_of(i)))
      throw CarrierMismatch(i, "relation does not run between the given carriers");
    out.emplace_back(i, std::move(r));
  }
  return out;
}

VSet set_at(const Fun& t, const Value& i) {
  const Value& v = t.at(i);
  if (!v.is_set()) throw NotSetFamily(i);
  return v.set_elements();
}

}  // namespace

Rel fork(const Fun& rels, const Fun& t, const VSet& s) {
  const auto family = checked_rel_family(
      rels, t, [&](const Value&) { return s; }, [&](const Value& i) { return set_at(t, i); });

  VSet sources = dom(family.front().second);
  for (const auto& [i, r] : family) sources = intersection_of(sources, dom(r));

  std::vector<std::pair<Value, Value>> out;
  for (const Value& tup : product(t)) {
    for (const Value& v : sources) {
      bool all = true;
      for (const auto& [i, r] : family) {
        if (!r.holds(v, tup.fun().at(i))) {
          all = false;
          break;
        }
      }
      if (all) out.emplace_back(v, tup);
    }
  }
  return Rel(std::move(out));
}

Rel fork_pointfree(const Fun& rels, const Fun& t, const VSet& s) {
  const auto family = checked_rel_family(
      rels, t, [&](const Value&) { return s; }, [&](const Value& i) { return set_at(t, i); });

  const Fun prs = projections(t);
  bool started = false;
  Rel acc;
  for (const auto& [i, r] : family) {
    const Rel term = compose(converse(graph(prs.at(i).fun())), r);
    acc = started ? intersection_of(acc, term) : term;
    started = true;
  }
  return restrict_dom(acc, s);
}

namespace {

void require_same_index(const Fun& a, const Fun& b) {
  if (a.domain() != b.domain()) {
    const VSet diff =
        union_of(difference_of(a.domain(), b.domain()), difference_of(b.domain(), a.domain()));
    throw CarrierMismatch(diff.elements().front(), "index sets differ");
  }
}

}  // namespace

Rel par(const Fun& rels, const Fun& t, const Fun& t2) {
  require_same_index(t, t2);
  const auto family = checked_rel_family(
      rels, t, [&](const Value& i) { return set_at(t, i); },
      [&](const Value& i) { return set_at(t2, i); });

  std::vector<std::pair<Value, Value>> out;
  for (const Value& a : product(t)) {
    for (const Value& b : product(t2)) {
      bool all = true;
      for (const auto& [i, r] : family) {
        if (!r.holds(a.fun().at(i), b.fun().at(i))) {
          all = false;
          break;
        }
      }
      if (all) out.emplace_back(a, b);
    }
  }
  return Rel(std::move(out));
}

Rel par_pointfree(const Fun& rels, const Fun& t, const Fun& t2) {
  require_same_index(t, t2);
  const auto family = checked_rel_family(
      rels, t, [&](const Value& i) { return set_at(t, i); },
      [&](const Value& i) { return set_at(t2, i); });

  const Fun prs = projections(t);
  std::vector<std::pair<Value, Value>> shifted;
  shifted.reserve(family.size());
  for (const auto& [i, r] : family) {
    const Rel term = compose(r, graph(prs.at(i).fun()));
    shifted.emplace_back(i, Value::set(term.as_set()));
  }
  VSet tuples = product(t);
  return fork(Fun::from_entries(std::move(shifted)), t2, tuples);
}

std::pair<Fun, Fun> tabulate(const Rel& r) {
  std::vector<std::pair<Value, Value>> fst, snd;
  fst.reserve(r.size());
  snd.reserve(r.size());
  for (const auto& [x, y] : r.pairs()) {
    const Value p = Value::pair(x, y);
    fst.emplace_back(p, x);
    snd.emplace_back(p, y);
  }
  return {Fun::from_entries(std::move(fst)), Fun::from_entries(std::move(snd))};
}

namespace {

std::uint64_t mul_or_budget(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max());
  return a * b;
}

// All families i -> pick(i) with pick(i) drawn from pools[i]; odometer order.
// Each pool is a set of function values.
class FamilyOdometer {
 public:
  FamilyOdometer(std::vector<Value> index, std::vector<VSet> pools)
      : index_(std::move(index)), pools_(std::move(pools)) {
    count_ = 1;
    for (const auto& p : pools_) count_ = mul_or_budget(count_, p.size());
  }

  std::uint64_t count() const { return count_; }

  Fun at(std::uint64_t n) const {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(index_.size());
    for (std::size_t k = index_.size(); k-- > 0;) {
      const std::uint64_t sz = pools_[k].size();
      entries.emplace_back(index_[k], pools_[k].elements()[n % sz]);
      n /= sz;
    }
    return Fun::from_entries(std::move(entries));
  }

 private:
  std::vector<Value> index_;
  std::vector<VSet> pools_;
  std::uint64_t count_ = 1;
};

}  // namespace

LawReport check_product_universal(const Fun& t, const VSet& s, std::uint64_t budget) {
  Value offender;
  if (!is_set_family(t, &offender)) throw NotSetFamily(offender);

  const VSet tuples = product(t);
  const VSet candidates = function_space(s, tuples);
  const Fun prs = projections(t);

  std::vector<Value> index;
  std::vector<VSet> pools;
  for (const auto& [i, v] : t.entries()) {
    index.push_back(i);
    pools.push_back(function_space(s, v.set_elements()));
  }
  FamilyOdometer families(index, pools);

  const std::uint64_t estimate = mul_or_budget(families.count(), candidates.size());
  if (estimate > budget) throw BudgetExceeded(estimate);

  LawReport rep;
  rep.id = "check-product-universal";
  rep.instances_checked = estimate;

  for (std::uint64_t n = 0; n < families.count(); ++n) {
    const Fun fam = families.at(n);

    // the mediating map determined pointwise: s ↦ (i ↦ f_i s)
    std::vector<std::pair<Value, Value>> expected;
    for (const Value& src : s) {
      std::vector<std::pair<Value, Value>> tup;
      for (const auto& [i, fi] : fam.entries()) tup.emplace_back(i, fi.fun().at(src));
      expected.emplace_back(src, Value::function(Fun::from_entries(std::move(tup))));
    }
    const Fun g0 = Fun::from_entries(std::move(expected));

    std::uint64_t solutions = 0;
    bool g0_is_solution = false;
    for (const Value& gv : candidates) {
      const Fun& g = gv.fun();
      bool ok = true;
      for (const auto& [i, fi] : fam.entries()) {
        if (compose_fun(prs.at(i).fun(), g) != fi.fun()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++solutions;
        if (g == g0) g0_is_solution = true;
      }
    }

    bool pass = solutions == 1 && g0_is_solution;
    if (pass && !fam.empty()) pass = transpose(fam) == g0;
    if (!pass) {
      rep.outcome = LawReport::Outcome::Fail;
      rep.counterexample = "T = " + to_string(t) + ", S = " + to_string(s) +
                           ", f = " + to_string(fam) + ", solutions = " +
                           std::to_string(solutions);
      return rep;
    }
  }
  rep.outcome = LawReport::Outcome::Pass;
  return rep;
}

LawReport check_sum_universal(const Fun& t, const VSet& s, std::uint64_t budget) {
  Value offender;
  if (!is_set_family(t, &offender)) throw NotSetFamily(offender);

  const VSet labeled = disjoint_union(t);
  const VSet candidates = function_space(labeled, s);
  const Fun labs = labelings(t);

  std::vector<Value> index;
  std::vector<VSet> pools;
  for (const auto& [i, v] : t.entries()) {
    index.push_back(i);
    pools.push_back(function_space(v.set_elements(), s));
  }
  FamilyOdometer families(index, pools);

  const std::uint64_t estimate = mul_or_budget(families.count(), candidates.size());
  if (estimate > budget) throw BudgetExceeded(estimate);

  LawReport rep;
  rep.id = "check-sum-universal";
  rep.instances_checked = estimate;

  for (std::uint64_t n = 0; n < families.count(); ++n) {
    const Fun fam = families.at(n);
    const Fun g0 = uncurry_family(fam);

    std::uint64_t solutions = 0;
    bool g0_is_solution = false;
    for (const Value& gv : candidates) {
      const Fun& g = gv.fun();
      bool ok = true;
      for (const auto& [i, fi] : fam.entries()) {
        if (compose_fun(g, labs.at(i).fun()) != fi.fun()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++solutions;
        if (g == g0) g0_is_solution = true;
      }
    }

    if (solutions != 1 || !g0_is_solution) {
      rep.outcome = LawReport::Outcome::Fail;
      rep.counterexample = "T = " + to_string(t) + ", S = " + to_string(s) +
                           ", f = " + to_string(fam) + ", solutions = " +
                           std::to_string(solutions);
      return rep;
    }
  }
  rep.outcome = LawReport::Outcome::Pass;
  return rep;
}

namespace {

void require_matching_index(const Fun& fam, const Fun& t) {
  if (fam.empty()) throw EmptyIndex();
  if (fam.domain() != t.domain()) {
    const VSet diff = union_of(difference_of(fam.domain(), t.domain()),
                               difference_of(t.domain(), fam.domain()));
    throw CarrierMismatch(diff.elements().front(), "index sets differ");
  }
}

LawReport bijection_report(const char* id, const Fun& map, const VSet& target) {
  LawReport rep;
  rep.id = id;
  rep.instances_checked = map.size() + target.size();

  const auto& es = map.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].second == es[j].second) {
        rep.outcome = LawReport::Outcome::Fail;
        rep.counterexample = "not injective: " + to_string(es[i].first) + " and " +
                             to_string(es[j].first) + " map to " + to_string(es[i].second);
        return rep;
      }
    }
  }
  for (const Value& v : target) {
    if (!map.range().contains(v)) {
      rep.outcome = LawReport::Outcome::Fail;
      rep.counterexample = "not onto: " + to_string(v) + " is not reached";
      return rep;
    }
  }
  rep.outcome = LawReport::Outcome::Pass;
  rep.detail = "inverse h = " + to_string(inverse(map));
  return rep;
}

}  // namespace

LawReport check_product_candidate(const Fun& gamma, const VSet& c, const Fun& t) {
  Value offender;
  if (!is_fun_family(gamma, &offender)) throw NotFunctionFamily(offender);
  if (!is_set_family(t, &offender)) throw NotSetFamily(offender);
  require_matching_index(gamma, t);
  for (const auto& [i, v] : gamma.entries())
    if (!is_fun_from(v.fun(), c, t.at(i).set_elements()))
      throw CarrierMismatch(i, "candidate component is not a function from C to T_i");

  return bijection_report("check-product-candidate", transpose(gamma), product(t));
}

LawReport check_sum_candidate(const Fun& delta, const VSet& d, const Fun& t) {
  Value offender;
  if (!is_fun_family(delta, &offender)) throw NotFunctionFamily(offender);
  if (!is_set_family(t, &offender)) throw NotSetFamily(offender);
  require_matching_index(delta, t);
  for (const auto& [i, v] : delta.entries())
    if (!is_fun_from(v.fun(), t.at(i).set_elements(), d))
      throw CarrierMismatch(i, "candidate component is not a function from T_i to D");

  return bijection_report("check-sum-candidate", uncurry_family(delta), d);
}

}  // namespace finrel
