#include "finrel/report.hpp"

namespace finrel {

std::string to_string(LawReport::Outcome o) {
  switch (o) {
    case LawReport::Outcome::Pass:
      return "pass";
    case LawReport::Outcome::Fail:
      return "fail";
    case LawReport::Outcome::BudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace finrel
