#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "finrel/errors.hpp"
#include "finrel/function.hpp"
#include "finrel/relation.hpp"
#include "finrel/report.hpp"
#include "finrel/value.hpp"

namespace finrel {

enum class EnumMode { Exhaustive, Sampled };

/// Bounds and determinism knobs for every enumeration the law engine runs.
struct EnumConfig {
  int max_carrier = 2;
  std::vector<Value> atom_pool;  ///< carriers draw from the first max_carrier entries
  EnumMode mode = EnumMode::Exhaustive;
  std::uint64_t samples = 50;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  std::uint64_t eval_cap = 1'000'000;  ///< hard cap on predicate evaluations per law

  static constexpr std::uint64_t kDefaultSeed = 1729;
  static EnumConfig defaults(int max_carrier = 2);

  /// First max_carrier atoms of the pool.
  std::vector<Value> pool() const;
};

/// A finite instance space addressed by index. Index 0 holds the smallest
/// instances (spaces are built size-ordered), so the first failure found in
/// enumeration order is a small counterexample.
template <class T>
struct Space {
  std::uint64_t count = 0;
  std::function<T(std::uint64_t)> item;
};

namespace detail {
/// count multiplication with overflow saturation flagged as a budget problem.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max());
  return a * b;
}
}  // namespace detail

/// Subsets of `base`, ordered by size then by canonical element order.
Space<VSet> subsets_space(const std::vector<Value>& base);

/// All relations with pairs drawn from x × y, ordered by pair count.
Space<Rel> relations_space(const VSet& x, const VSet& y);

/// All total functions x → y, odometer order over canonical x.
Space<Fun> functions_space(const VSet& x, const VSet& y);

/// All functions with domain ⊆ x and range ⊆ y.
Space<Fun> partial_functions_space(const VSet& x, const VSet& y);

/// Families over the fixed index list `index` whose values are subsets of
/// `pool`; `min_member_size` filters e.g. empty member sets out.
Space<Fun> set_families_space(const std::vector<Value>& index, const std::vector<Value>& pool,
                              std::size_t min_member_size = 0);

/// Families over `index` whose value at position k is drawn from spaces[k].
Space<Fun> fun_families_space(const std::vector<Value>& index,
                              const std::vector<Space<Fun>>& spaces);

template <class A, class B>
Space<std::pair<A, B>> pair_space(Space<A> a, Space<B> b) {
  Space<std::pair<A, B>> out;
  out.count = detail::checked_mul(a.count, b.count);
  out.item = [a = std::move(a), b = std::move(b)](std::uint64_t i) {
    return std::pair<A, B>(a.item(i / b.count), b.item(i % b.count));
  };
  return out;
}

template <class A, class B, class C>
Space<std::tuple<A, B, C>> triple_space(Space<A> a, Space<B> b, Space<C> c) {
  Space<std::tuple<A, B, C>> out;
  out.count = detail::checked_mul(detail::checked_mul(a.count, b.count), c.count);
  out.item = [a = std::move(a), b = std::move(b), c = std::move(c)](std::uint64_t i) {
    const std::uint64_t bc = b.count * c.count;
    return std::tuple<A, B, C>(a.item(i / bc), b.item((i / c.count) % b.count),
                               c.item(i % c.count));
  };
  return out;
}

template <class T, class U>
Space<U> map_space(Space<T> s, std::function<U(const T&)> fn) {
  Space<U> out;
  out.count = s.count;
  out.item = [s = std::move(s), fn = std::move(fn)](std::uint64_t i) {
    const T t = s.item(i);
    return fn(t);
  };
  return out;
}

/// Concatenation; earlier spaces enumerate first.
template <class T>
Space<T> concat_spaces(std::vector<Space<T>> parts) {
  Space<T> out;
  for (const auto& p : parts) out.count += p.count;
  out.item = [parts = std::move(parts)](std::uint64_t i) -> T {
    for (const auto& p : parts) {
      if (i < p.count) return p.item(i);
      i -= p.count;
    }
    throw std::out_of_range("space index");
  };
  return out;
}

namespace detail {

/// Index stream for one law run: identity over [0, count) in exhaustive mode,
/// a seeded uniform draw in sampled mode. Sampling the same (count, samples,
/// seed) twice yields the identical stream.
std::vector<std::uint64_t> plan_indices(std::uint64_t count, const EnumConfig& cfg);

}  // namespace detail

/// Deterministic, optionally parallel check of `pred` over a space. The
/// report names the first failing instance in stream order and counts
/// instances up to and including it; both are independent of cfg.jobs.
template <class T>
LawReport run_over(const std::string& id, const Space<T>& space, const EnumConfig& cfg,
                   const std::function<bool(const T&)>& pred,
                   const std::function<std::string(const T&)>& show) {
  LawReport rep;
  rep.id = id;
  if (cfg.mode == EnumMode::Exhaustive && space.count > cfg.eval_cap) {
    rep.outcome = LawReport::Outcome::BudgetExceeded;
    rep.budget_estimate = space.count;
    return rep;
  }

  const std::vector<std::uint64_t> indices = detail::plan_indices(space.count, cfg);
  const std::uint64_t n = indices.size();
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

  std::atomic<std::uint64_t> first_fail{none};
  std::atomic<std::uint64_t> budget_hit{none};
  const int jobs = cfg.jobs > 1 ? cfg.jobs : 1;

  auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      if (first_fail.load(std::memory_order_relaxed) < k) return;
      bool ok;
      try {
        ok = pred(space.item(indices[k]));
      } catch (const BudgetExceeded&) {
        std::uint64_t cur = budget_hit.load();
        while (k < cur && !budget_hit.compare_exchange_weak(cur, k)) {
        }
        return;
      } catch (...) {
        // an instance the predicate cannot even process is a counterexample
        ok = false;
      }
      if (!ok) {
        std::uint64_t cur = first_fail.load();
        while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
        }
        return;
      }
    }
  };

  if (jobs == 1 || n < 2) {
    worker(0, n);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (n + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t lo = std::min<std::uint64_t>(j * chunk, n);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, n);
      if (lo < hi) threads.emplace_back(worker, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  const std::uint64_t bh = budget_hit.load();
  const std::uint64_t ff = first_fail.load();
  if (bh != none && bh <= ff) {
    rep.outcome = LawReport::Outcome::BudgetExceeded;
    rep.budget_estimate = cfg.eval_cap;
    rep.instances_checked = bh;
    return rep;
  }
  if (ff != none) {
    rep.outcome = LawReport::Outcome::Fail;
    rep.instances_checked = ff + 1;
    rep.counterexample = show(space.item(indices[ff]));
    return rep;
  }
  rep.outcome = LawReport::Outcome::Pass;
  rep.instances_checked = n;
  return rep;
}

}  // namespace finrel
