#include "qsw/error.hpp"

namespace qsw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::HalfPowerUnavailable: return "HalfPowerUnavailable";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::BlockInconsistent: return "BlockInconsistent";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::NotOneDimensionalCharacter: return "NotOneDimensionalCharacter";
    case ErrorCode::InvalidDepth: return "InvalidDepth";
    case ErrorCode::TorusNotSemisimple: return "TorusNotSemisimple";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotHighestWeight: return "NotHighestWeight";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::SingularVectorNotFound: return "SingularVectorNotFound";
    case ErrorCode::InvalidSpecialization: return "InvalidSpecialization";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qsw
