#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finrel/value.hpp"

namespace finrel {

/// A relation is nothing but a finite set of ordered pairs, stored here as a
/// canonically sorted list of (input, output) entries. Source and target
/// carriers are never part of the object; dom/ran are computed.
///
/// Pair direction convention, used everywhere: (x, y) is stored as
/// (input, output), i.e. holds(R, x, y) reads "x is R-related to y".
class Rel {
 public:
  Rel() = default;
  explicit Rel(std::vector<std::pair<Value, Value>> pairs);

  /// Interprets a set value as a relation; nullopt if some element is not a
  /// pair (the offender is reported through `offender` when given).
  static std::optional<Rel> from_set(const VSet& s, Value* offender = nullptr);

  VSet as_set() const;
  bool holds(const Value& x, const Value& y) const;
  const std::vector<std::pair<Value, Value>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const Rel& a, const Rel& b) { return a.pairs_ == b.pairs_; }
  friend bool operator!=(const Rel& a, const Rel& b) { return !(a == b); }

 private:
  std::vector<std::pair<Value, Value>> pairs_;
};

/// Set of first members / second members.
VSet dom(const Rel& r);
VSet ran(const Rel& r);

/// (x, z) in compose(s, r) iff there is a y with (x, y) in r and (y, z) in s.
/// Total on arbitrary relations; no carrier matching is imposed.
Rel compose(const Rel& s, const Rel& r);

Rel converse(const Rel& r);

Rel identity(const VSet& a);

/// dom r ⊆ x and ran r ⊆ y.
bool is_relation_from(const Rel& r, const VSet& x, const VSet& y);

/// r ⊆ x × y. Logically equivalent to is_relation_from; kept as a separate
/// evaluator so the equivalence can be checked instance by instance.
bool is_relation_from_product(const Rel& r, const VSet& x, const VSet& y);

/// No two pairs share a first member.
bool is_functional(const Rel& r);

Rel union_of(const Rel& a, const Rel& b);
Rel intersection_of(const Rel& a, const Rel& b);
Rel difference_of(const Rel& a, const Rel& b);
Rel restrict_dom(const Rel& r, const VSet& a);

std::string to_string(const Rel& r);

}  // namespace finrel
