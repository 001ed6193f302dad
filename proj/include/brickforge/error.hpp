#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brickforge {

enum class ErrorKind {
  LoopRejected,
  VertexOutOfRange,
  TooLarge,
  EmptyOrFullShore,
  EmptyShore,
  UnknownEdge,
  PreconditionViolated,
  NotMatchingCovered,
  NotDegreeTwo,
  NotDegreeThree,
  NotDegreeFour,
  NeighborsCoincide,
  InvalidSplit,
  NotATriangle,
  NotCubic,
  NotABrick,
  Degenerate,
  UnknownName,
  MultigraphNotRepresentable,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI, the Python module) can map it without string matching.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace brickforge
