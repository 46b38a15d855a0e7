#pragma once

#include <cstdint>
#include <string>

#include "finrel/function.hpp"
#include "finrel/value.hpp"

namespace finrel {

/// A family is a function viewed as indexed data; its domain is the index
/// set. Role constraints (all values sets / all values functions) are checked
/// at the operations that need them.
using Fam = Fun;

bool is_set_family(const Fun& t, Value* offender = nullptr);
bool is_fun_family(const Fun& f, Value* offender = nullptr);

/// The set of choice functions of a set family: all f with dom f = dom t and
/// f(i) in t(i). The empty family yields the singleton {empty function}.
VSet product(const Fun& t);

/// Family of projection functions: pr(i) has domain product(t) and picks the
/// i-th component of a choice function.
Fun projections(const Fun& t);

/// For a nonempty family f of functions, the function on ∩ dom f_i sending s
/// to the family i ↦ f_i(s). On families with a common domain S this is the
/// mediating map of the product.
Fun transpose(const Fun& f);

/// { (i, x) | i in dom t, x in t(i) }.
VSet disjoint_union(const Fun& t);

/// Family of labeling functions: lab(i) has domain t(i) and sends x to (i, x).
Fun labelings(const Fun& t);

/// For f with a pair-shaped domain: curry(f)(x) is the function
/// y ↦ f((x, y)) on {y | (x, y) in dom f}.
Fun curry(const Fun& f);

/// For a family F of functions: the function (x, y) ↦ F(x)(y) on
/// { (x, y) | x in dom F, y in dom F(x) }. Mediating map of the sum.
Fun uncurry_family(const Fun& f);

/// All total functions x → y, as a set of function values; size |y|^|x|.
VSet function_space(const VSet& x, const VSet& y);

/// All functions with domain ⊆ x and range ⊆ y; size (|y|+1)^|x|.
VSet partial_function_space(const VSet& x, const VSet& y);

/// Evaluation function on function_space(y, z) × y sending (g, v) to g(v).
Fun alpha(const VSet& y, const VSet& z);

/// Componentwise pairing on a primitive cartesian domain:
/// (x, y) ↦ (f x, g y) on dom f × dom g.
Fun pair_parallel(const Fun& f, const Fun& g);

}  // namespace finrel
