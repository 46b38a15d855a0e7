#include "finrel/enumerate.hpp"

#include <algorithm>
#include <bit>

namespace finrel {

EnumConfig EnumConfig::defaults(int max_carrier) {
  EnumConfig cfg;
  cfg.max_carrier = max_carrier;
  return cfg;
}

std::vector<Value> EnumConfig::pool() const {
  std::vector<Value> out = atom_pool;
  if (out.empty()) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (int i = 0; i < max_carrier && i < 8; ++i) out.push_back(Value::atom(names[i]));
    for (int i = 8; i < max_carrier; ++i)
      out.push_back(Value::atom("a" + std::to_string(i)));
  }
  if (static_cast<int>(out.size()) > max_carrier) out.resize(max_carrier);
  return out;
}

namespace detail {

std::vector<std::uint64_t> plan_indices(std::uint64_t count, const EnumConfig& cfg) {
  std::vector<std::uint64_t> out;
  if (count == 0) return out;
  if (cfg.mode == EnumMode::Exhaustive) {
    out.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) out[i] = i;
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, count - 1);
    out.reserve(cfg.samples);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) out.push_back(dist(rng));
  }
  return out;
}

namespace {

// Bitmask list over n slots ordered by popcount, then numerically; small
// instances come first.
std::vector<std::uint64_t> size_ordered_masks(unsigned n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(1ull << n);
  for (std::uint64_t m = 0; m < (1ull << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

}  // namespace
}  // namespace detail

Space<VSet> subsets_space(const std::vector<Value>& base) {
  auto masks = std::make_shared<std::vector<std::uint64_t>>(
      detail::size_ordered_masks(static_cast<unsigned>(base.size())));
  Space<VSet> sp;
  sp.count = masks->size();
  sp.item = [base, masks](std::uint64_t n) {
    std::vector<Value> out;
    const std::uint64_t m = (*masks)[n];
    for (std::size_t i = 0; i < base.size(); ++i)
      if (m & (1ull << i)) out.push_back(base[i]);
    return VSet(std::move(out));
  };
  return sp;
}

Space<Rel> relations_space(const VSet& x, const VSet& y) {
  auto pairs = std::make_shared<std::vector<std::pair<Value, Value>>>();
  for (const Value& a : x)
    for (const Value& b : y) pairs->emplace_back(a, b);
  auto masks = std::make_shared<std::vector<std::uint64_t>>(
      detail::size_ordered_masks(static_cast<unsigned>(pairs->size())));
  Space<Rel> sp;
  sp.count = masks->size();
  sp.item = [pairs, masks](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> out;
    const std::uint64_t m = (*masks)[n];
    for (std::size_t i = 0; i < pairs->size(); ++i)
      if (m & (1ull << i)) out.push_back((*pairs)[i]);
    return Rel(std::move(out));
  };
  return sp;
}

Space<Fun> functions_space(const VSet& x, const VSet& y) {
  Space<Fun> sp;
  if (!x.empty() && y.empty()) {
    sp.count = 0;
    return sp;
  }
  sp.count = 1;
  for (std::size_t i = 0; i < x.size(); ++i) sp.count = detail::checked_mul(sp.count, y.size());
  auto xs = std::make_shared<std::vector<Value>>(x.elements());
  auto ys = std::make_shared<std::vector<Value>>(y.elements());
  sp.item = [xs, ys](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(xs->size());
    for (std::size_t k = xs->size(); k-- > 0;) {
      entries.emplace_back((*xs)[k], (*ys)[n % ys->size()]);
      n /= ys->size();
    }
    return Fun::from_entries(std::move(entries));
  };
  return sp;
}

Space<Fun> partial_functions_space(const VSet& x, const VSet& y) {
  Space<Fun> sp;
  sp.count = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    sp.count = detail::checked_mul(sp.count, y.size() + 1);
  auto xs = std::make_shared<std::vector<Value>>(x.elements());
  auto ys = std::make_shared<std::vector<Value>>(y.elements());
  sp.item = [xs, ys](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> entries;
    const std::uint64_t base = ys->size() + 1;
    for (std::size_t k = xs->size(); k-- > 0;) {
      const std::uint64_t digit = n % base;
      if (digit > 0) entries.emplace_back((*xs)[k], (*ys)[digit - 1]);
      n /= base;
    }
    return Fun::from_entries(std::move(entries));
  };
  return sp;
}

Space<Fun> set_families_space(const std::vector<Value>& index, const std::vector<Value>& pool,
                              std::size_t min_member_size) {
  Space<VSet> members = subsets_space(pool);
  // filter the per-member space up front; sizes here are tiny
  auto kept = std::make_shared<std::vector<VSet>>();
  for (std::uint64_t i = 0; i < members.count; ++i) {
    VSet s = members.item(i);
    if (s.size() >= min_member_size) kept->push_back(std::move(s));
  }
  Space<Fun> sp;
  sp.count = 1;
  for (std::size_t i = 0; i < index.size(); ++i)
    sp.count = detail::checked_mul(sp.count, kept->size());
  auto idx = std::make_shared<std::vector<Value>>(index);
  sp.item = [idx, kept](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(idx->size());
    for (std::size_t k = idx->size(); k-- > 0;) {
      entries.emplace_back((*idx)[k], Value::set((*kept)[n % kept->size()]));
      n /= kept->size();
    }
    return Fun::from_entries(std::move(entries));
  };
  return sp;
}

Space<Fun> fun_families_space(const std::vector<Value>& index,
                              const std::vector<Space<Fun>>& spaces) {
  Space<Fun> sp;
  sp.count = 1;
  for (const auto& s : spaces) sp.count = detail::checked_mul(sp.count, s.count);
  auto idx = std::make_shared<std::vector<Value>>(index);
  auto sps = std::make_shared<std::vector<Space<Fun>>>(spaces);
  sp.item = [idx, sps](std::uint64_t n) {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(idx->size());
    for (std::size_t k = idx->size(); k-- > 0;) {
      const auto& s = (*sps)[k];
      entries.emplace_back((*idx)[k], Value::function(s.item(n % s.count)));
      n /= s.count;
    }
    return Fun::from_entries(std::move(entries));
  };
  return sp;
}

}  // namespace finrel
