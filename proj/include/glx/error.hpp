#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glx {

enum class ErrorCode {
  InvalidInput,
  NonConvergence,
  AllCollinear,
  DegenerateShape,
  ApexOnHull,
  NotConcaveQuadrilateral,
  RightSideZero,
  DegenerateTriangle,
  InfeasibleSpec,
  BudgetExhausted,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::ApexOnHull: return "ApexOnHull";
    case ErrorCode::NotConcaveQuadrilateral: return "NotConcaveQuadrilateral";
    case ErrorCode::RightSideZero: return "RightSideZero";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status or HTTP status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glx
