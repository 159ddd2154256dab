#include "loopfact/errors.hpp"

namespace loopfact {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParameterOnOrOutsideDisk: return "ParameterOnOrOutsideDisk";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DetNotOne: return "DetNotOne";
    case ErrorCode::NotInverse: return "NotInverse";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::WindingNonzero: return "WindingNonzero";
    case ErrorCode::VanishesOnCircle: return "VanishesOnCircle";
    case ErrorCode::NotSU11: return "NotSU11";
    case ErrorCode::E11Vanishes: return "E11Vanishes";
    case ErrorCode::NotInBigCell: return "NotInBigCell";
    case ErrorCode::NotInTopStratum: return "NotInTopStratum";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::BoundaryConditionFails: return "BoundaryConditionFails";
    case ErrorCode::NotIdentityComponent: return "NotIdentityComponent";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::NonrealDeterminant: return "NonrealDeterminant";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParameterOnOrOutsideDisk:
    case ErrorCode::WrongLength:
    case ErrorCode::WrongShape:
    case ErrorCode::TruncationTooSmall:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DetNotOne:
    case ErrorCode::NotInverse:
      return ErrorClass::Validation;
    case ErrorCode::NumericalBreakdown:
    case ErrorCode::NonrealDeterminant:
      return ErrorClass::Numerical;
    default:
      return ErrorClass::Precondition;
  }
}

int exit_code(ErrorCode code) {
  switch (error_class(code)) {
    case ErrorClass::Validation: return 2;
    case ErrorClass::Precondition: return 3;
    case ErrorClass::Numerical: return 4;
  }
  return 1;
}

LoopError::LoopError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw LoopError(code, detail); }

}  // namespace loopfact
