#pragma once

#include <stdexcept>
#include <string>

namespace cwdc {

enum class ErrorCode {
  MuOutOfRange,
  DivisibilityViolation,
  ZeroSize,
  SimLimitExceeded,
  LostFilesPresent,
  MissingValue,
  MissingSegment,
  InconsistentLengths,
  SingularMatrix,
  RetryLimitExceeded,
  SizeExceedsField,
  DivideByZero,
  BadInput,
};

const char* error_code_name(ErrorCode c);

// Single exception type for the whole library; `code()` distinguishes
// configuration errors (CLI exit 2) from decode failures (CLI exit 4).
class SimError : public std::runtime_error {
 public:
  SimError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  bool is_config_error() const {
    switch (code_) {
      case ErrorCode::MuOutOfRange:
      case ErrorCode::DivisibilityViolation:
      case ErrorCode::ZeroSize:
      case ErrorCode::SimLimitExceeded:
      case ErrorCode::BadInput:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace cwdc
