#include "artin/error.hpp"

namespace artin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::OddEdgeMismatch: return "OddEdgeMismatch";
    case ErrorCode::MovePreconditionViolated: return "MovePreconditionViolated";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::NonDiscreteCharacter: return "NonDiscreteCharacter";
    case ErrorCode::CutInvalid: return "CutInvalid";
    case ErrorCode::ColouringInvalidOnCut: return "ColouringInvalidOnCut";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace artin
