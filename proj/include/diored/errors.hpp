#pragma once

#include <stdexcept>
#include <string>

namespace diored {

enum class ErrorKind {
  ParseError,
  UnknownVariable,
  RegistryMismatch,
  ArityMismatch,
  ZeroPolynomial,
  NotUnivariate,
  VariableCollision,
  EmptyInput,
  ResourceCap,
  ConstantInput,
  NonIntegerInput,
  CSearchExhausted,
  DimensionTooSmall,
  DimensionMismatch,
  PointNotOnCurve,
  SingularCurve,
  InfiniteOrderSanityFailed,
  ZeroProjectivePoint,
  EquivalenceViolation,
  PropertyViolation,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace diored
