#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arsss {

enum class ErrorCode {
  NegativeValue,
  WidthMismatch,
  NotDivisible,
  NotRestricted,
  DimensionMismatch,
  Singular,
  NonIntegralSolution,
  BadParams,
  RankConditionViolated,
  NotEnoughShares,
  NegativesUnavailable,
  FieldTooLarge,
  NotFullRank,
  TooLarge,
  FingerprintMismatch,
  ParseError,
  IoError,
};

/// Upper snake case name of a code, e.g. "NOT_ENOUGH_SHARES". Stable: the CLI
/// prints it on stderr for machine consumption.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arsss
