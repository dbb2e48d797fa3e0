#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimat {

enum class ErrorCode {
  DimensionMismatch,
  AlgebraMismatch,
  FieldMismatch,
  InvalidInput,
  AssociativityViolation,
  UnitViolation,
  IdempotentViolation,
  ActionViolation,
  InvalidRelation,
  UnsupportedField,
  RadicalUnavailable,
  CategoryMismatch,
  InvariantViolation,
  ApproximationNotInjective,
  NotPerfect,
  HypothesisFailure,
  GldimUnknown,
  IdentificationFailure,
  NeitherBlockInvertible,
  SingularCartan,
  NotDivisionCase,
  NonBasic,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` tells callers which
// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trimat
