#pragma once

#include <cstdint>
#include <string>

namespace finrel {

/// Outcome of checking one quantified law over an enumerated instance space.
/// Reports are deterministic for a fixed configuration regardless of worker
/// count: a failure always names the first counterexample in enumeration
/// order, and instances_checked counts up to and including it.
struct LawReport {
  enum class Outcome { Pass, Fail, BudgetExceeded };

  std::string id;
  std::uint64_t instances_checked = 0;
  Outcome outcome = Outcome::Pass;
  std::string counterexample;        ///< replayable serialized instance, on Fail
  std::uint64_t budget_estimate = 0; ///< estimated instance count, on BudgetExceeded
  std::string detail;                ///< extra result data (e.g. a recovered inverse)

  bool passed() const { return outcome == Outcome::Pass; }
  bool failed() const { return outcome == Outcome::Fail; }
};

std::string to_string(LawReport::Outcome o);

}  // namespace finrel
