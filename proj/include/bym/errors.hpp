#pragma once

#include <stdexcept>
#include <string>

namespace bym {

enum class ErrorKind {
  NotHermitian,
  NotPositiveDefinite,
  DimensionMismatch,
  NegativeEigenvalue,
  ResampleLimitExceeded,
  NotDiagonal,
  NotNormalized,
  StepTooLarge,
  BasePointMismatch,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for all domain errors; `kind()` identifies the
/// violated invariant and is what the CLI reports on exit 2.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

private:
  ErrorKind kind_;
};

}  // namespace bym
