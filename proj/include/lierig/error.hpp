#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lierig {

enum class Errc {
  RankOutOfRange,
  DimensionMismatch,
  NotDominant,
  Overflow,
  ZeroDenominator,
  MissingFamilyRow,
  SupportFull,
  SupportNotFull,
  InternalCaseGap,
  WindowTooWide,
  OracleRefused,
  InsufficientCoverage,
  NoViolationFound,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace lierig
