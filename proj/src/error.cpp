#include "logmaj/error.hpp"

namespace logmaj {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotPartition: return "NotPartition";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kNegativeValues: return "NegativeValues";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kMeasureMismatch: return "MeasureMismatch";
    case ErrorCode::kInvalidIntervals: return "InvalidIntervals";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNotPositiveInvertible: return "NotPositiveInvertible";
    case ErrorCode::kNotStrictContraction: return "NotStrictContraction";
    case ErrorCode::kNormNotAboveOne: return "NormNotAboveOne";
    case ErrorCode::kContractionRequired: return "ContractionRequired";
    case ErrorCode::kWeightsInvalid: return "WeightsInvalid";
    case ErrorCode::kZeroOnK: return "ZeroOnK";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIdentityMismatch: return "IdentityMismatch";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace logmaj
