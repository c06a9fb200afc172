#include "diaghook/error.hpp"

namespace diaghook {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonMonotonic: return "NonMonotonic";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::CellOutOfDiagram: return "CellOutOfDiagram";
    case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidBetaSet: return "InvalidBetaSet";
    case ErrorCode::TooFewBeads: return "TooFewBeads";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::OddModulusRequired: return "OddModulusRequired";
    case ErrorCode::CenterResidue: return "CenterResidue";
    case ErrorCode::NotACore: return "NotACore";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonEmptyCore: return "NonEmptyCore";
    case ErrorCode::NotAPHook: return "NotAPHook";
    case ErrorCode::WrongQuotientLength: return "WrongQuotientLength";
    case ErrorCode::NotSymmetricQuotient: return "NotSymmetricQuotient";
    case ErrorCode::NotSymmetricBisequence: return "NotSymmetricBisequence";
    case ErrorCode::InconsistentQuotient: return "InconsistentQuotient";
    case ErrorCode::InvalidDeltaSet: return "InvalidDeltaSet";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace diaghook
