#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lieinv {

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateLabel,
  NonzeroSelfBracket,
  DimensionMismatch,
  NotClosed,
  UniverseMismatch,
  NotDivisible,
  NotSquare,
  UndefinedAtAllSamples,
  NotNilpotentOperator,
  NotNilpotent,
  TorusNotAbelian,
  NotDiagonalOnBasis,
  SplitMissing,
  NotRegular,
  ZeroAlpha,
  HypothesisFailed,
  BadParameters,
  DenominatorNotSemiInvariant,
  SyntaxError,
  UnknownVariable,
  MixedForm,
  ZeroDenominator,
  InvalidJson,
  JacobiViolation,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code identifies the failure
// class, the message carries the specifics (offending indices, positions).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  // Character offset for SyntaxError / UnknownVariable.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace lieinv
