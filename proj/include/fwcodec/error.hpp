#ifndef FWCODEC_ERROR_HPP_
#define FWCODEC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fwc {

enum class ErrorCode {
  // input validation
  EmptyInput,
  NonPositiveProbability,
  ProbabilitySumMismatch,
  DuplicateLabel,
  DimensionMismatch,
  IndexOutOfRange,
  LengthExceedsWidth,
  KraftViolation,
  WidthTooSmall,
  InvalidDocument,
  // decoding a word that the scheme never produces
  NoPrefixMatch,
  UnknownResidual,
  // solver limits
  WidthTooLarge,
  ExplosionGuard,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Validation errors stem from bad input; the rest are solver-side limits.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace fwc

#endif  // FWCODEC_ERROR_HPP_
