#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "finrel/enumerate.hpp"
#include "finrel/report.hpp"

namespace finrel {

/// One entry of the built-in law catalog. `statement` is a self-contained
/// one-line description of what is quantified. Laws with expect_fail are
/// executable refutations: the suite counts them as in order exactly when
/// they fail with a witness.
struct Law {
  std::string id;
  std::string statement;
  bool expect_fail = false;
  std::function<LawReport(const EnumConfig&)> run;
};

const std::vector<Law>& law_catalog();

/// Catalog lookup; throws UnknownLaw.
const Law& find_law(const std::string& id);

LawReport run_law(const std::string& id, const EnumConfig& cfg);
std::vector<LawReport> run_suite(const std::vector<std::string>& ids, const EnumConfig& cfg);

/// All catalog ids in catalog order.
std::vector<std::string> law_ids();

/// {id, instances, outcome, counterexample?, detail?} — the structured record
/// consumed by the machine-readable output mode.
nlohmann::json report_to_json(const LawReport& rep);

}  // namespace finrel
