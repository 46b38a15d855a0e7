#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace finrel {

class Fun;
class VSet;

enum class ValueKind { IntAtom, SymAtom, Pair, Set, Function };

/// One immutable node of the closed value universe: an atom (symbol or small
/// integer), an ordered pair, a finite set, or a function. Copies share
/// structure; every operation on values is pure.
class Value {
 public:
  Value();  ///< the atom 0
  static Value atom(std::int64_t n);
  static Value atom(std::string name);
  static Value atom(const char* name) { return atom(std::string(name)); }
  static Value pair(Value first, Value second);
  static Value set(VSet elements);
  static Value function(Fun f);

  ValueKind kind() const;
  bool is_atom() const;
  bool is_pair() const { return kind() == ValueKind::Pair; }
  bool is_set() const { return kind() == ValueKind::Set; }
  bool is_function() const { return kind() == ValueKind::Function; }

  std::int64_t int_payload() const;
  const std::string& sym_payload() const;
  const Value& first() const;
  const Value& second() const;
  const VSet& set_elements() const;
  const Fun& fun() const;

 private:
  struct Repr;
  explicit Value(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;

  friend int compare(const Value& a, const Value& b);
};

/// Total order over values: by kind (int atoms, symbol atoms, pairs, sets,
/// functions), then payload. It fixes canonical set layout and printing and
/// carries no semantic weight.
int compare(const Value& a, const Value& b);

bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

/// Finite set of values. Elements are deduplicated and kept in canonical
/// order, so equality is plain vector equality.
class VSet {
 public:
  VSet() = default;
  explicit VSet(std::vector<Value> elements);

  bool contains(const Value& v) const;
  bool subset_of(const VSet& other) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Value>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const VSet& a, const VSet& b) { return a.elems_ == b.elems_; }
  friend bool operator!=(const VSet& a, const VSet& b) { return !(a == b); }

 private:
  std::vector<Value> elems_;
};

int compare(const VSet& a, const VSet& b);

VSet union_of(const VSet& a, const VSet& b);
VSet intersection_of(const VSet& a, const VSet& b);
VSet difference_of(const VSet& a, const VSet& b);

/// All pairs (x, y) with x in `x` and y in `y`; size |x|·|y|.
VSet cartesian(const VSet& x, const VSet& y);

std::string to_string(const Value& v);
std::string to_string(const VSet& s);

}  // namespace finrel
