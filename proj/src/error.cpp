#include "gdwn/error.hpp"

namespace gdwn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::NonPositiveQ: return "NonPositiveQ";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::MultiplePair: return "MultiplePair";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::WrongSpec: return "WrongSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gdwn
