#include "lieinv/errors.hpp"

namespace lieinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NonzeroSelfBracket: return "NonzeroSelfBracket";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::UndefinedAtAllSamples: return "UndefinedAtAllSamples";
    case ErrorCode::NotNilpotentOperator: return "NotNilpotentOperator";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::TorusNotAbelian: return "TorusNotAbelian";
    case ErrorCode::NotDiagonalOnBasis: return "NotDiagonalOnBasis";
    case ErrorCode::SplitMissing: return "SplitMissing";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::DenominatorNotSemiInvariant: return "DenominatorNotSemiInvariant";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::MixedForm: return "MixedForm";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidJson: return "InvalidJson";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace lieinv
