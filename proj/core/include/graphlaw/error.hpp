#pragma once

#include <stdexcept>
#include <string>

namespace graphlaw {

enum class ErrorCode {
  NotDecomposable,
  NotDecomposableAfterToggle,
  CapExceeded,
  NotCovering,
  IncompatibleIntersection,
  UnknownLaw,
  OutOfSupport,
  ZeroMassEvent,
  NotStructurallyMarkov,
  IncompleteSupport,
  CyclicInput,
  CriteriaDisagree,
  NotCovered,
  NotAncestral,
  NotAncestralInDagoid,
  IncompatibleOrder,
  NumericalFailure,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::NotDecomposableAfterToggle: return "NotDecomposableAfterToggle";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::IncompatibleIntersection: return "IncompatibleIntersection";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::ZeroMassEvent: return "ZeroMassEvent";
    case ErrorCode::NotStructurallyMarkov: return "NotStructurallyMarkov";
    case ErrorCode::IncompleteSupport: return "IncompleteSupport";
    case ErrorCode::CyclicInput: return "CyclicInput";
    case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorCode::NotCovered: return "NotCovered";
    case ErrorCode::NotAncestral: return "NotAncestral";
    case ErrorCode::NotAncestralInDagoid: return "NotAncestralInDagoid";
    case ErrorCode::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

// Single exception type for all domain errors. The code is machine-readable
// and surfaces verbatim in the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace graphlaw
