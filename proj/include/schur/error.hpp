#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schur {

enum class ErrorKind {
  InvalidInput,
  BoundExceeded,
  NotAPartition,
  IdentityNotSingleton,
  NotInverseClosed,
  NotClosedUnderProduct,
  SchurViolation,
  NotASection,
  NotAnASet,
  IncompatibleOnSection,
  QuotientMismatch,
  NotAutomorphism,
  RightRegularNotContained,
  MapNotAlgebraic,
  NotAnIsomorphism,
  Schema,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws BoundExceeded when `value > bound`.
void check_bound(long value, long bound, std::string_view what);

}  // namespace schur
