#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nichols {

// Stable machine-readable error codes. The string forms are part of the CLI
// output contract; do not rename.
enum class ErrorCode {
  InvalidChar,
  TorsionDivisibleByP,
  NonCyclicTorsion,
  BadRelation,
  ContextMismatch,
  ParseError,
  AssignmentViolatesRelations,
  NotIFinite,
  CaseExhaustion,
  NotAdmitsAllReflections,
  PointLimitExceeded,
  CapExceeded,
  RankMismatch,
  UnsupportedChar,
  DecomposableInput,
  InternalTableMismatch,
  TableDataError,
  SyntaxError,
  ValidationError,
  Overflow,
  InternalError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nichols
