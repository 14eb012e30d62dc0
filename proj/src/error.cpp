#include "indist/error.hpp"

#include "indist/data.hpp"

namespace indist {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    case ErrorCode::EmptyLabelSet: return "empty label set";
    case ErrorCode::NoValidPairs: return "no valid pairs";
    case ErrorCode::NoBalancedThreshold: return "no balanced threshold";
    case ErrorCode::SeparationDetected: return "separation";
    case ErrorCode::NotConverged: return "not converged";
    case ErrorCode::UndefinedValue: return "undefined value";
  }
  return "unknown";
}

NoBalancedThresholdError::NoBalancedThresholdError(double target, double limit)
    : Error(ErrorCode::NoBalancedThreshold,
            "B(-inf) = " + format_double(limit) + " does not exceed target " + format_double(target)),
      target_(target),
      limit_(limit) {}

}  // namespace indist
