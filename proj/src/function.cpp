#include "finrel/function.hpp"

#include <algorithm>

#include "finrel/errors.hpp"

namespace finrel {

Fun Fun::from_entries(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (int c = compare(a.first, b.first)) return c < 0;
    return compare(a.second, b.second) < 0;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                            }),
                entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1].first == entries[i].first) throw NotFunctional(entries[i].first);
  Fun f;
  f.entries_ = std::move(entries);
  return f;
}

VSet Fun::domain() const {
  std::vector<Value> out;
  out.reserve(entries_.size());
  for (const auto& [x, y] : entries_) out.push_back(x);
  return VSet(std::move(out));
}

VSet Fun::range() const {
  std::vector<Value> out;
  out.reserve(entries_.size());
  for (const auto& [x, y] : entries_) out.push_back(y);
  return VSet(std::move(out));
}

bool Fun::defined_at(const Value& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const auto& e, const Value& v) { return compare(e.first, v) < 0; });
  return it != entries_.end() && it->first == x;
}

const Value& Fun::at(const Value& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const auto& e, const Value& v) { return compare(e.first, v) < 0; });
  if (it == entries_.end() || it->first != x) throw OutsideDomain(x);
  return it->second;
}

int compare(const Fun& a, const Fun& b) {
  const auto& xs = a.entries();
  const auto& ys = b.entries();
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(xs[i].first, ys[i].first)) return c;
    if (int c = compare(xs[i].second, ys[i].second)) return c;
  }
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

Value apply(const Fun& f, const Value& x) { return f.at(x); }

Fun fun_from_graph(const Rel& r) {
  return Fun::from_entries(r.pairs());
}

Rel graph(const Fun& f) { return Rel(f.entries()); }

Fun compose_fun(const Fun& g, const Fun& f) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, y] : f.entries())
    if (g.defined_at(y)) out.emplace_back(x, g.at(y));
  return Fun::from_entries(std::move(out));
}

Fun identity_fun(const VSet& a) {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(a.size());
  for (const Value& v : a) out.emplace_back(v, v);
  return Fun::from_entries(std::move(out));
}

bool is_fun_from(const Fun& f, const VSet& x, const VSet& y) {
  return f.domain() == x && f.range().subset_of(y);
}

bool is_onto(const Fun& f, const VSet& y) { return f.range() == y; }

bool is_total_on(const Fun& f, const VSet& x) { return f.domain() == x; }

bool is_partial_on(const Fun& f, const VSet& x) { return f.domain().subset_of(x); }

bool is_injective(const Fun& f) { return is_functional(converse(graph(f))); }

Fun inverse(const Fun& f) {
  const auto& es = f.entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].second == es[j].second) throw NotInjective(es[i].first, es[j].first);
  std::vector<std::pair<Value, Value>> out;
  out.reserve(es.size());
  for (const auto& [x, y] : es) out.emplace_back(y, x);
  return Fun::from_entries(std::move(out));
}

Fun define_by_proxy(const Fun& f, const Fun& h) {
  if (f.domain() != h.domain())
    throw KernelError("proxy requires dom h = dom f; got dom f = " + to_string(f.domain()) +
                      ", dom h = " + to_string(h.domain()));
  const auto& es = f.entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].second == es[j].second && h.at(es[i].first) != h.at(es[j].first))
        throw NotWellDefined(es[i].first, es[j].first);
  std::vector<std::pair<Value, Value>> out;
  for (const auto& [x, fx] : es) out.emplace_back(fx, h.at(x));
  return Fun::from_entries(std::move(out));
}

bool spec_check(const Fun& f, const VSet& x, const VSet& y,
                const std::function<bool(const Value&, const Value&)>& pred) {
  if (!is_fun_from(f, x, y)) return false;
  for (const Value& v : x)
    if (!pred(v, f.at(v))) return false;
  return true;
}

Fun tuple_of(const std::vector<Value>& vs) {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    out.emplace_back(Value::atom(static_cast<std::int64_t>(i)), vs[i]);
  return Fun::from_entries(std::move(out));
}

std::string to_string(const Fun& f) { return to_string(Value::function(f)); }

}  // namespace finrel
