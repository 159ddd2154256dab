#pragma once

#include <stdexcept>
#include <string>

namespace loopfact {

// Failure classes map onto CLI exit codes: validation -> 2,
// mathematical precondition -> 3, numerical breakdown -> 4.
enum class ErrorClass { Validation, Precondition, Numerical };

enum class ErrorCode {
  ParameterOnOrOutsideDisk,
  WrongLength,
  WrongShape,
  TruncationTooSmall,
  InvalidArgument,
  DetNotOne,
  NotInverse,
  NotPositive,
  NotUnimodular,
  WindingNonzero,
  VanishesOnCircle,
  NotSU11,
  E11Vanishes,
  NotInBigCell,
  NotInTopStratum,
  NotInImage,
  BoundaryConditionFails,
  NotIdentityComponent,
  SearchExhausted,
  NumericalBreakdown,
  NonrealDeterminant,
};

const char* error_name(ErrorCode code);
ErrorClass error_class(ErrorCode code);
int exit_code(ErrorCode code);

class LoopError : public std::runtime_error {
 public:
  LoopError(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace loopfact
