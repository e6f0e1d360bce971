#include "fwcodec/error.hpp"

namespace fwc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorCode::ProbabilitySumMismatch: return "ProbabilitySumMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthExceedsWidth: return "LengthExceedsWidth";
    case ErrorCode::KraftViolation: return "KraftViolation";
    case ErrorCode::WidthTooSmall: return "WidthTooSmall";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::NoPrefixMatch: return "NoPrefixMatch";
    case ErrorCode::UnknownResidual: return "UnknownResidual";
    case ErrorCode::WidthTooLarge: return "WidthTooLarge";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::WidthTooLarge:
    case ErrorCode::ExplosionGuard:
    case ErrorCode::Overflow:
      return false;
    default:
      return true;
  }
}

}  // namespace fwc
