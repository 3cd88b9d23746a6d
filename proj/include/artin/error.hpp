#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

enum class ErrorCode {
  DuplicateEdge,
  LoopEdge,
  BadLabel,
  UnknownVertex,
  NotSpherical,
  RankTooLarge,
  ZeroCharacter,
  OddEdgeMismatch,
  MovePreconditionViolated,
  BadResidue,
  MixedFields,
  NonDiscreteCharacter,
  CutInvalid,
  ColouringInvalidOnCut,
  InvariantBreach,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace artin
