#include "finrel/errors.hpp"

namespace finrel {

NotFunctional::NotFunctional(Value w)
    : KernelError("not functional: two pairs share first member " + to_string(w)),
      witness(std::move(w)) {}

OutsideDomain::OutsideDomain(Value v)
    : KernelError("application outside the domain: " + to_string(v)), value(std::move(v)) {}

NotInjective::NotInjective(Value a, Value b)
    : KernelError("not injective: " + to_string(a) + " and " + to_string(b) +
                  " share an image"),
      first(std::move(a)),
      second(std::move(b)) {}

NotWellDefined::NotWellDefined(Value a, Value b)
    : KernelError("proxy not well defined: f agrees on " + to_string(a) + " and " +
                  to_string(b) + " but h does not"),
      first(std::move(a)),
      second(std::move(b)) {}

NotSetFamily::NotSetFamily(Value i)
    : KernelError("family value at " + to_string(i) + " is not a set"), index(std::move(i)) {}

NotFunctionFamily::NotFunctionFamily(Value i)
    : KernelError("family value at " + to_string(i) + " is not a function"),
      index(std::move(i)) {}

EmptyFamily::EmptyFamily() : KernelError("transpose of an empty family") {}

EmptyIndex::EmptyIndex() : KernelError("construction requires a nonempty index set") {}

CarrierMismatch::CarrierMismatch(Value i, const std::string& detail)
    : KernelError("carrier mismatch at index " + to_string(i) +
                  (detail.empty() ? "" : ": " + detail)),
      index(std::move(i)) {}

DomainNotPairs::DomainNotPairs(Value w)
    : KernelError("domain element is not a pair: " + to_string(w)), witness(std::move(w)) {}

BudgetExceeded::BudgetExceeded(std::uint64_t est)
    : KernelError("enumeration budget exceeded; estimated " + std::to_string(est) +
                  " instances"),
      estimate(est) {}

UnknownLaw::UnknownLaw(std::string law_id)
    : KernelError("unknown law: " + law_id), id(std::move(law_id)) {}

}  // namespace finrel
