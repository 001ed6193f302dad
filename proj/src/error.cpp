#include "brickforge/error.hpp"

namespace brickforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyOrFullShore: return "EmptyOrFullShore";
    case ErrorKind::EmptyShore: return "EmptyShore";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotMatchingCovered: return "NotMatchingCovered";
    case ErrorKind::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorKind::NotDegreeThree: return "NotDegreeThree";
    case ErrorKind::NotDegreeFour: return "NotDegreeFour";
    case ErrorKind::NeighborsCoincide: return "NeighborsCoincide";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotABrick: return "NotABrick";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::MultigraphNotRepresentable: return "MultigraphNotRepresentable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace brickforge
