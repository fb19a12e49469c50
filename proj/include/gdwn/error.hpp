#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdwn {

enum class ErrorCode {
  EmptySpec,
  NonPositiveQ,
  NegativeEntry,
  MultiplePair,
  GridTooLarge,
  BudgetExceeded,
  Overflow,
  InvalidPair,
  InvalidInput,
  InsufficientData,
  WrongSpec,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
/// The code lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gdwn
