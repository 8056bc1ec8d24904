#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpc {

enum class ErrorCode {
  DisconnectedGraph,
  SelfLoop,
  NonpositiveWeight,
  DuplicateEdgeConflict,
  EmptyGraph,
  LengthMismatch,
  UnknownFamily,
  BadParams,
  NonpositiveMass,
  MeasureNotNormalized,
  OmegaNotProper,
  UnknownVertex,
  NotPositiveDefinite,
  NoConvergence,
  DimensionTooLarge,
  ObjectiveNaN,
  IndexOutOfRange,
  InternalIdentityViolation,
  BadFamily,
  UnknownTheoremId,
  BadF,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gpc
