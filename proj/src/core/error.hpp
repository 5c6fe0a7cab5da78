#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqcurv {

enum class ErrorCode {
  DegenerateMetric,
  NotSymmetric,
  DimensionTooSmall,
  DimensionMismatch,
  UnknownSpace,
  NotGeneralizedCurvature,
  NotAlgebraic,
  FormSymmetryViolation,
  EmptySpace,
  InconclusiveRank,
  DegenerateAtPoint,
  SchemaError,
  LengthMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it into a status value without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require_same_dim(int a, int b, const char* what) {
  if (a != b)
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace eqcurv
