#include "diored/errors.hpp"

namespace diored {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::RegistryMismatch: return "RegistryMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotUnivariate: return "NotUnivariate";
    case ErrorKind::VariableCollision: return "VariableCollision";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::NonIntegerInput: return "NonIntegerInput";
    case ErrorKind::CSearchExhausted: return "CSearchExhausted";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::InfiniteOrderSanityFailed: return "InfiniteOrderSanityFailed";
    case ErrorKind::ZeroProjectivePoint: return "ZeroProjectivePoint";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace diored
