#pragma once

#include <stdexcept>
#include <string>

namespace logmaj {

enum class ErrorCode {
  kNotPartition,
  kNotMonotone,
  kOutOfDomain,
  kNegativeValues,
  kNotInvertible,
  kMeasureMismatch,
  kInvalidIntervals,
  kDimensionMismatch,
  kNotHermitian,
  kNoConvergence,
  kSingular,
  kNotPositive,
  kNotPositiveInvertible,
  kNotStrictContraction,
  kNormNotAboveOne,
  kContractionRequired,
  kWeightsInvalid,
  kZeroOnK,
  kOutOfRange,
  kIdentityMismatch,
  kConfigInvalid,
  kIoError,
  kParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python module) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logmaj
