#include "gpc/error.hpp"

namespace gpc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::DuplicateEdgeConflict: return "DuplicateEdgeConflict";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NonpositiveMass: return "NonpositiveMass";
    case ErrorCode::MeasureNotNormalized: return "MeasureNotNormalized";
    case ErrorCode::OmegaNotProper: return "OmegaNotProper";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ObjectiveNaN: return "ObjectiveNaN";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InternalIdentityViolation: return "InternalIdentityViolation";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::BadF: return "BadF";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gpc
