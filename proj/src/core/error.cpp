#include "error.hpp"

namespace eqcurv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::DegenerateMetric: return "DegenerateMetric";
  case ErrorCode::NotSymmetric: return "NotSymmetric";
  case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::UnknownSpace: return "UnknownSpace";
  case ErrorCode::NotGeneralizedCurvature: return "NotGeneralizedCurvature";
  case ErrorCode::NotAlgebraic: return "NotAlgebraic";
  case ErrorCode::FormSymmetryViolation: return "FormSymmetryViolation";
  case ErrorCode::EmptySpace: return "EmptySpace";
  case ErrorCode::InconclusiveRank: return "InconclusiveRank";
  case ErrorCode::DegenerateAtPoint: return "DegenerateAtPoint";
  case ErrorCode::SchemaError: return "SchemaError";
  case ErrorCode::LengthMismatch: return "LengthMismatch";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace eqcurv
