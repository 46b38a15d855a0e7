#pragma once

#include <cstdint>
#include <utility>

#include "finrel/family.hpp"
#include "finrel/relation.hpp"
#include "finrel/report.hpp"

namespace finrel {

/// Interprets a family value at index i as a relation; the family carries
/// relations as plain pair-set values.
Rel rel_at(const Fun& rels, const Value& i);

/// Fork of a nonempty family of relations rels_i from s to t(i): relates
/// source v to every choice function c in product(t) with (v, c(i)) in
/// rels_i for all i. Throws EmptyIndex when the index set is empty and
/// CarrierMismatch(i) when rels_i does not run from s to t(i).
Rel fork(const Fun& rels, const Fun& t, const VSet& s);

/// Same relation built the point-free way: the intersection over i of
/// converse(graph pr_i) composed with rels_i, restricted to sources in s.
Rel fork_pointfree(const Fun& rels, const Fun& t, const VSet& s);

/// Parallel composition of rels_i from t(i) to t2(i): relates choice
/// functions componentwise. Same preconditions as fork.
Rel par(const Fun& rels, const Fun& t, const Fun& t2);

/// Parallel built as the fork of i ↦ rels_i ∘ graph(pr_i).
Rel par_pointfree(const Fun& rels, const Fun& t, const Fun& t2);

/// Tabulation of r: functions f, g on r's own pair set with f(x, y) = x and
/// g(x, y) = y, so that r = g ∘ f˘ and (f˘∘f) ∩ (g˘∘g) = id.
std::pair<Fun, Fun> tabulate(const Rel& r);

/// Brute-force universal-property check for the product: enumerates every
/// family f with f_i : s → t(i) and every candidate g : s → product(t),
/// asserting exactly one g satisfies f_i = pr_i ∘ g for all i and that it is
/// the transpose of f. Throws BudgetExceeded when the candidate×family count
/// exceeds `budget`.
LawReport check_product_universal(const Fun& t, const VSet& s,
                                  std::uint64_t budget = 1'000'000);

/// Dual check for the disjoint union: families f with f_i : t(i) → s,
/// candidates g : disjoint_union(t) → s, unique solution uncurry_family(f).
LawReport check_sum_universal(const Fun& t, const VSet& s,
                              std::uint64_t budget = 1'000'000);

/// Constructive check of a product candidate: given gamma with
/// gamma_i : c → t(i), reports whether transpose(gamma) is a bijection from
/// c onto product(t) and, if so, exhibits its inverse in `detail`. A failure
/// carries a witness (two collapsed elements, or an unreached tuple).
LawReport check_product_candidate(const Fun& gamma, const VSet& c, const Fun& t);

/// Dual: whether uncurry_family(delta) is a bijection from disjoint_union(t)
/// onto d, with the inverse exhibited on success.
LawReport check_sum_candidate(const Fun& delta, const VSet& d, const Fun& t);

}  // namespace finrel
