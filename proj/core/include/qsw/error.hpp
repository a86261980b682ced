#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsw {

enum class ErrorCode {
  DivisionByZero,
  InvalidArgument,
  ParseError,
  InvalidParams,
  HalfPowerUnavailable,
  RankMismatch,
  IndexOutOfRange,
  DimensionMismatch,
  NoSolution,
  BlockInconsistent,
  InvalidRank,
  ParamMismatch,
  NotOneDimensionalCharacter,
  InvalidDepth,
  TorusNotSemisimple,
  ZeroVector,
  NotHighestWeight,
  NotDominant,
  SingularVectorNotFound,
  InvalidSpecialization,
  DegenerateParameters,
  UnsupportedRank,
  SizeMismatch,
  PreconditionViolated,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace qsw
