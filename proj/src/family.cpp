#include "finrel/family.hpp"

#include <limits>

#include "finrel/errors.hpp"

namespace finrel {

namespace {

// Keeps runaway space enumerations (driven e.g. from a script) finite.
constexpr std::uint64_t kSpaceCap = 1'000'000;

std::uint64_t sized_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max());
  return a * b;
}

}  // namespace

bool is_set_family(const Fun& t, Value* offender) {
  for (const auto& [i, v] : t.entries()) {
    if (!v.is_set()) {
      if (offender) *offender = i;
      return false;
    }
  }
  return true;
}

bool is_fun_family(const Fun& f, Value* offender) {
  for (const auto& [i, v] : f.entries()) {
    if (!v.is_function()) {
      if (offender) *offender = i;
      return false;
    }
  }
  return true;
}

namespace {

void require_set_family(const Fun& t) {
  Value offender;
  if (!is_set_family(t, &offender)) throw NotSetFamily(offender);
}

void require_fun_family(const Fun& f) {
  Value offender;
  if (!is_fun_family(f, &offender)) throw NotFunctionFamily(offender);
}

}  // namespace

VSet product(const Fun& t) {
  require_set_family(t);
  const auto& items = t.entries();
  std::uint64_t total = 1;
  for (const auto& [i, v] : items) total = sized_mul(total, v.set_elements().size());
  if (total > kSpaceCap) throw BudgetExceeded(total);
  if (total == 0) return VSet();

  std::vector<Value> out;
  out.reserve(total);
  std::vector<std::size_t> odo(items.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<std::pair<Value, Value>> choice;
    choice.reserve(items.size());
    for (std::size_t k = 0; k < items.size(); ++k)
      choice.emplace_back(items[k].first, items[k].second.set_elements().elements()[odo[k]]);
    out.push_back(Value::function(Fun::from_entries(std::move(choice))));
    for (std::size_t k = items.size(); k-- > 0;) {
      if (++odo[k] < items[k].second.set_elements().size()) break;
      odo[k] = 0;
    }
  }
  return VSet(std::move(out));
}

Fun projections(const Fun& t) {
  require_set_family(t);
  const VSet tuples = product(t);
  std::vector<std::pair<Value, Value>> prs;
  for (const auto& [i, v] : t.entries()) {
    std::vector<std::pair<Value, Value>> table;
    table.reserve(tuples.size());
    for (const Value& tup : tuples) table.emplace_back(tup, tup.fun().at(i));
    prs.emplace_back(i, Value::function(Fun::from_entries(std::move(table))));
  }
  return Fun::from_entries(std::move(prs));
}

Fun transpose(const Fun& f) {
  require_fun_family(f);
  if (f.empty()) throw EmptyFamily();
  VSet shared = f.entries().front().second.fun().domain();
  for (const auto& [i, v] : f.entries()) shared = intersection_of(shared, v.fun().domain());

  std::vector<std::pair<Value, Value>> table;
  table.reserve(shared.size());
  for (const Value& s : shared) {
    std::vector<std::pair<Value, Value>> fam;
    fam.reserve(f.size());
    for (const auto& [i, v] : f.entries()) fam.emplace_back(i, v.fun().at(s));
    table.emplace_back(s, Value::function(Fun::from_entries(std::move(fam))));
  }
  return Fun::from_entries(std::move(table));
}

VSet disjoint_union(const Fun& t) {
  require_set_family(t);
  std::vector<Value> out;
  for (const auto& [i, v] : t.entries())
    for (const Value& x : v.set_elements()) out.push_back(Value::pair(i, x));
  return VSet(std::move(out));
}

Fun labelings(const Fun& t) {
  require_set_family(t);
  std::vector<std::pair<Value, Value>> labs;
  for (const auto& [i, v] : t.entries()) {
    std::vector<std::pair<Value, Value>> table;
    table.reserve(v.set_elements().size());
    for (const Value& x : v.set_elements()) table.emplace_back(x, Value::pair(i, x));
    labs.emplace_back(i, Value::function(Fun::from_entries(std::move(table))));
  }
  return Fun::from_entries(std::move(labs));
}

Fun curry(const Fun& f) {
  for (const auto& [k, v] : f.entries())
    if (!k.is_pair()) throw DomainNotPairs(k);

  // pair keys sort by first component, so each group is a contiguous run
  std::vector<std::pair<Value, Value>> outer;
  const auto& es = f.entries();
  std::size_t i = 0;
  while (i < es.size()) {
    const Value x = es[i].first.first();
    std::vector<std::pair<Value, Value>> inner;
    while (i < es.size() && es[i].first.first() == x) {
      inner.emplace_back(es[i].first.second(), es[i].second);
      ++i;
    }
    outer.emplace_back(x, Value::function(Fun::from_entries(std::move(inner))));
  }
  return Fun::from_entries(std::move(outer));
}

Fun uncurry_family(const Fun& f) {
  require_fun_family(f);
  std::vector<std::pair<Value, Value>> table;
  for (const auto& [x, v] : f.entries())
    for (const auto& [y, z] : v.fun().entries()) table.emplace_back(Value::pair(x, y), z);
  return Fun::from_entries(std::move(table));
}

VSet function_space(const VSet& x, const VSet& y) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < x.size(); ++k) total = sized_mul(total, y.size());
  if (total > kSpaceCap) throw BudgetExceeded(total);
  if (x.empty()) return VSet({Value::function(Fun())});
  if (y.empty()) return VSet();

  std::vector<Value> out;
  out.reserve(total);
  std::vector<std::size_t> odo(x.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<std::pair<Value, Value>> table;
    table.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      table.emplace_back(x.elements()[k], y.elements()[odo[k]]);
    out.push_back(Value::function(Fun::from_entries(std::move(table))));
    for (std::size_t k = x.size(); k-- > 0;) {
      if (++odo[k] < y.size()) break;
      odo[k] = 0;
    }
  }
  return VSet(std::move(out));
}

VSet partial_function_space(const VSet& x, const VSet& y) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < x.size(); ++k) total = sized_mul(total, y.size() + 1);
  if (total > kSpaceCap) throw BudgetExceeded(total);

  std::vector<Value> out;
  out.reserve(total);
  std::vector<std::size_t> odo(x.size(), 0);  // digit 0 means "absent"
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<std::pair<Value, Value>> table;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (odo[k] > 0) table.emplace_back(x.elements()[k], y.elements()[odo[k] - 1]);
    out.push_back(Value::function(Fun::from_entries(std::move(table))));
    for (std::size_t k = x.size(); k-- > 0;) {
      if (++odo[k] < y.size() + 1) break;
      odo[k] = 0;
    }
  }
  return VSet(std::move(out));
}

Fun alpha(const VSet& y, const VSet& z) {
  const VSet funs = function_space(y, z);
  std::vector<std::pair<Value, Value>> table;
  table.reserve(funs.size() * y.size());
  for (const Value& g : funs)
    for (const Value& v : y) table.emplace_back(Value::pair(g, v), g.fun().at(v));
  return Fun::from_entries(std::move(table));
}

Fun pair_parallel(const Fun& f, const Fun& g) {
  std::vector<std::pair<Value, Value>> table;
  table.reserve(f.size() * g.size());
  for (const auto& [x, fx] : f.entries())
    for (const auto& [y, gy] : g.entries())
      table.emplace_back(Value::pair(x, y), Value::pair(fx, gy));
  return Fun::from_entries(std::move(table));
}

}  // namespace finrel
