#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorCode {
  IllegalValence,
  SizeMismatch,
  SyntaxError,
  SemanticError,
  ConvergenceFailure,
  CutoffTooLow,
  DegenerateNodes,
  StepTooLarge,
  NotAStar,
  UnequalLengths,
  UnknownBond,
  DisconnectedStep,
  BudgetExceeded,
  ReferenceTooCoarse,
  DomainError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalValence: return "IllegalValence";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::CutoffTooLow: return "CutoffTooLow";
    case ErrorCode::DegenerateNodes: return "DegenerateNodes";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NotAStar: return "NotAStar";
    case ErrorCode::UnequalLengths: return "UnequalLengths";
    case ErrorCode::UnknownBond: return "UnknownBond";
    case ErrorCode::DisconnectedStep: return "DisconnectedStep";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ReferenceTooCoarse: return "ReferenceTooCoarse";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

/// Exception carrying a stable error code alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace casimir
