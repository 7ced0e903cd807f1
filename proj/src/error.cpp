#include "arsss/error.hpp"

namespace arsss {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeValue: return "NEGATIVE_VALUE";
    case ErrorCode::WidthMismatch: return "WIDTH_MISMATCH";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::NotRestricted: return "NOT_RESTRICTED";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::NonIntegralSolution: return "NON_INTEGRAL_SOLUTION";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::RankConditionViolated: return "RANK_CONDITION_VIOLATED";
    case ErrorCode::NotEnoughShares: return "NOT_ENOUGH_SHARES";
    case ErrorCode::NegativesUnavailable: return "NEGATIVES_UNAVAILABLE";
    case ErrorCode::FieldTooLarge: return "FIELD_TOO_LARGE";
    case ErrorCode::NotFullRank: return "NOT_FULL_RANK";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::FingerprintMismatch: return "FINGERPRINT_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace arsss
