#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diaghook {

/// All integer quantities in the library. Weights are capped at 2^31.
using Int = std::int64_t;

enum class ErrorCode {
  NonMonotonic,
  NonPositivePart,
  CellOutOfDiagram,
  NotStrictlyDecreasing,
  LengthMismatch,
  InvalidBetaSet,
  TooFewBeads,
  BadModulus,
  BadResidue,
  OddModulusRequired,
  CenterResidue,
  NotACore,
  NotSymmetric,
  NonEmptyCore,
  NotAPHook,
  WrongQuotientLength,
  NotSymmetricQuotient,
  NotSymmetricBisequence,
  InconsistentQuotient,
  InvalidDeltaSet,
  InternalInconsistency,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace diaghook
