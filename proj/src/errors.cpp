#include "normgeom/errors.hpp"

#include <utility>

namespace normgeom {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DegeneratePiece: return "DegeneratePiece";
    case ErrorCode::DegenerateDual: return "DegenerateDual";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MismatchedBalls: return "MismatchedBalls";
    case ErrorCode::DecompositionResidual: return "DecompositionResidual";
    case ErrorCode::NotConvexInput: return "NotConvexInput";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::EmbeddingFailed: return "EmbeddingFailed";
  }
  return "Unknown";
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& message)
    : Error(ErrorCode::Syntax, message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace normgeom
