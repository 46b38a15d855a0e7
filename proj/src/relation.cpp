#include "finrel/relation.hpp"

#include <algorithm>

namespace finrel {

namespace {

int cmp_pair(const std::pair<Value, Value>& a, const std::pair<Value, Value>& b) {
  if (int c = compare(a.first, b.first)) return c;
  return compare(a.second, b.second);
}

void normalize(std::vector<std::pair<Value, Value>>& pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return cmp_pair(a, b) < 0; });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const auto& a, const auto& b) { return cmp_pair(a, b) == 0; }),
              pairs.end());
}

}  // namespace

Rel::Rel(std::vector<std::pair<Value, Value>> pairs) : pairs_(std::move(pairs)) {
  normalize(pairs_);
}

std::optional<Rel> Rel::from_set(const VSet& s, Value* offender) {
  std::vector<std::pair<Value, Value>> pairs;
  pairs.reserve(s.size());
  for (const Value& v : s) {
    if (!v.is_pair()) {
      if (offender) *offender = v;
      return std::nullopt;
    }
    pairs.emplace_back(v.first(), v.second());
  }
  return Rel(std::move(pairs));
}

VSet Rel::as_set() const {
  std::vector<Value> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(Value::pair(x, y));
  return VSet(std::move(out));
}

bool Rel::holds(const Value& x, const Value& y) const {
  for (const auto& [a, b] : pairs_)
    if (a == x && b == y) return true;
  return false;
}

VSet dom(const Rel& r) {
  std::vector<Value> out;
  out.reserve(r.size());
  for (const auto& [x, y] : r.pairs()) out.push_back(x);
  return VSet(std::move(out));
}

VSet ran(const Rel& r) {
  std::vector<Value> out;
  out.reserve(r.size());
  for (const auto& [x, y] : r.pairs()) out.push_back(y);
  return VSet(std::move(out));
}

Rel compose(const Rel& s, const Rel& r) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, y] : r.pairs())
    for (const auto& [u, z] : s.pairs())
      if (y == u) out.emplace_back(x, z);
  return Rel(std::move(out));
}

Rel converse(const Rel& r) {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(r.size());
  for (const auto& [x, y] : r.pairs()) out.emplace_back(y, x);
  return Rel(std::move(out));
}

Rel identity(const VSet& a) {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(a.size());
  for (const Value& v : a) out.emplace_back(v, v);
  return Rel(std::move(out));
}

bool is_relation_from(const Rel& r, const VSet& x, const VSet& y) {
  return dom(r).subset_of(x) && ran(r).subset_of(y);
}

bool is_relation_from_product(const Rel& r, const VSet& x, const VSet& y) {
  return r.as_set().subset_of(cartesian(x, y));
}

bool is_functional(const Rel& r) {
  // pairs are sorted by first member, so duplicates are adjacent
  const auto& ps = r.pairs();
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (ps[i - 1].first == ps[i].first) return false;
  return true;
}

Rel union_of(const Rel& a, const Rel& b) {
  auto out = a.pairs();
  out.insert(out.end(), b.pairs().begin(), b.pairs().end());
  return Rel(std::move(out));
}

Rel intersection_of(const Rel& a, const Rel& b) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, y] : a.pairs())
    if (b.holds(x, y)) out.emplace_back(x, y);
  return Rel(std::move(out));
}

Rel difference_of(const Rel& a, const Rel& b) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, y] : a.pairs())
    if (!b.holds(x, y)) out.emplace_back(x, y);
  return Rel(std::move(out));
}

Rel restrict_dom(const Rel& r, const VSet& a) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, y] : r.pairs())
    if (a.contains(x)) out.emplace_back(x, y);
  return Rel(std::move(out));
}

std::string to_string(const Rel& r) { return to_string(r.as_set()); }

}  // namespace finrel
