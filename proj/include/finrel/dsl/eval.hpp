#pragma once

#include <string>
#include <vector>

#include "finrel/dsl/ast.hpp"
#include "finrel/enumerate.hpp"

namespace finrel::dsl {

enum class EntryStatus { Ok, Failed, Error };

struct TraceEntry {
  Pos pos;
  std::string stmt;    ///< canonical rendering of the statement
  std::string output;  ///< value, check verdict, or diagnostic
  EntryStatus status = EntryStatus::Ok;
};

struct Trace {
  std::vector<TraceEntry> entries;
  /// No failed checks/asserts and no errors.
  bool ok() const;
};

/// Runs statements in order against a single environment. A failed check is
/// recorded and evaluation continues; a failed assert or any error (name,
/// type, kernel) is recorded with the statement's position and halts the
/// script. `cfg` drives law checks. Deterministic: same script and config,
/// same trace.
Trace evaluate(const Script& s, const EnumConfig& cfg = EnumConfig::defaults());

}  // namespace finrel::dsl
