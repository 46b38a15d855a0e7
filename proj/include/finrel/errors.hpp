#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "finrel/value.hpp"

namespace finrel {

/// Base class for every error a kernel operation can raise. The message is
/// human-readable; subclasses keep the offending values for inspection.
class KernelError : public std::runtime_error {
 public:
  explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A relation had two pairs with the same first member where a function was
/// required; `witness` is that first member.
class NotFunctional : public KernelError {
 public:
  explicit NotFunctional(Value witness);
  Value witness;
};

/// Function application outside the domain.
class OutsideDomain : public KernelError {
 public:
  explicit OutsideDomain(Value value);
  Value value;
};

/// Two distinct arguments mapped to the same value where injectivity was
/// required.
class NotInjective : public KernelError {
 public:
  NotInjective(Value first, Value second);
  Value first, second;
};

/// Proxy specification is not well defined: f(x) = f(x') but h(x) != h(x').
class NotWellDefined : public KernelError {
 public:
  NotWellDefined(Value first, Value second);
  Value first, second;
};

/// A family operation needed set values; `index` maps to something else.
class NotSetFamily : public KernelError {
 public:
  explicit NotSetFamily(Value index);
  Value index;
};

/// A family operation needed function values; `index` maps to something else.
class NotFunctionFamily : public KernelError {
 public:
  explicit NotFunctionFamily(Value index);
  Value index;
};

/// Transpose of an empty family has no determinable domain.
class EmptyFamily : public KernelError {
 public:
  EmptyFamily();
};

/// Fork/parallel constructions require a nonempty index set.
class EmptyIndex : public KernelError {
 public:
  EmptyIndex();
};

/// A family member does not live between the carriers supplied for it.
class CarrierMismatch : public KernelError {
 public:
  explicit CarrierMismatch(Value index, const std::string& detail = "");
  Value index;
};

/// Currying needs a domain made of pairs; `witness` is a non-pair element.
class DomainNotPairs : public KernelError {
 public:
  explicit DomainNotPairs(Value witness);
  Value witness;
};

/// An enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public KernelError {
 public:
  explicit BudgetExceeded(std::uint64_t estimate);
  std::uint64_t estimate;
};

/// Law id not present in the catalog.
class UnknownLaw : public KernelError {
 public:
  explicit UnknownLaw(std::string id);
  std::string id;
};

}  // namespace finrel
