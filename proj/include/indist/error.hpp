#pragma once

#include <stdexcept>
#include <string>

namespace indist {

enum class ErrorCode {
  InvalidArgument = 1,
  Validation,
  Parse,
  Io,
  EmptyLabelSet,
  NoValidPairs,
  NoBalancedThreshold,
  SeparationDetected,
  NotConverged,
  UndefinedValue,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the core library carries one of the codes above;
/// the C layer maps them one-to-one onto indist_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when no down-crossing of the balance target exists; carries B(-inf).
class NoBalancedThresholdError : public Error {
 public:
  NoBalancedThresholdError(double target, double limit);

  double target() const noexcept { return target_; }
  double limit() const noexcept { return limit_; }

 private:
  double target_;
  double limit_;
};

}  // namespace indist
