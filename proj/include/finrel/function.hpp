#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "finrel/relation.hpp"
#include "finrel/value.hpp"

namespace finrel {

/// A function is fully specified by its domain and a unique value at each
/// domain element — nothing else. There is no codomain field: the carriers a
/// function maps between are check-time parameters, never attributes.
/// Equality is equal domain plus pointwise equal values, which the canonical
/// sorted table makes plain vector equality.
class Fun {
 public:
  Fun() = default;

  /// Builds a function from (argument, value) entries. Exact duplicates
  /// collapse; two entries with the same argument and different values raise
  /// NotFunctional with that argument as witness.
  static Fun from_entries(std::vector<std::pair<Value, Value>> entries);

  VSet domain() const;
  VSet range() const;
  const std::vector<std::pair<Value, Value>>& entries() const { return entries_; }
  bool defined_at(const Value& x) const;
  const Value& at(const Value& x) const;  ///< throws OutsideDomain
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Fun& a, const Fun& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Fun& a, const Fun& b) { return !(a == b); }

 private:
  std::vector<std::pair<Value, Value>> entries_;  // sorted by argument
};

int compare(const Fun& a, const Fun& b);

/// f(x); values outside the domain are irrelevant to a function, so
/// application there is an OutsideDomain error rather than a junk value.
Value apply(const Fun& f, const Value& x);

/// Reads a functional relation as a function. Throws NotFunctional if some
/// first member has two images.
Fun fun_from_graph(const Rel& r);

/// {(x, f x) | x in dom f}. Inverse of fun_from_graph.
Rel graph(const Fun& f);

/// Unrestricted composition: the domain is every x in dom f whose image lies
/// in dom g, so arbitrary functions compose.
Fun compose_fun(const Fun& g, const Fun& f);

Fun identity_fun(const VSet& a);

/// dom f = x and ran f ⊆ y.
bool is_fun_from(const Fun& f, const VSet& x, const VSet& y);
/// ran f = y. "Onto" always takes the set as an argument.
bool is_onto(const Fun& f, const VSet& y);
bool is_total_on(const Fun& f, const VSet& x);
bool is_partial_on(const Fun& f, const VSet& x);
bool is_injective(const Fun& f);

/// Function with domain ran f mapping f(x) back to x. Throws NotInjective
/// with a witness pair when two arguments share an image.
Fun inverse(const Fun& f);

/// Specification by proxy: the g with g(f x) = h x on dom g = ran f.
/// Requires dom h = dom f; throws NotWellDefined(x, x') when f(x) = f(x')
/// but h(x) != h(x').
Fun define_by_proxy(const Fun& f, const Fun& h);

/// True iff f is a function from x to y and pred(v, f v) holds for all v in x.
bool spec_check(const Fun& f, const VSet& x, const VSet& y,
                const std::function<bool(const Value&, const Value&)>& pred);

/// Function with domain {0, ..., n-1} sending i to vs[i].
Fun tuple_of(const std::vector<Value>& vs);

std::string to_string(const Fun& f);

}  // namespace finrel
