#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rph {

enum class ErrorKind {
  InvalidInput,
  CycleDetected,
  NotTwoTerminal,
  MissingTerminal,
  RouteExplosion,
  NotOnRoute,
  OrderViolation,
  InconsistentOrder,
  HingeMismatch,
  TerminalMismatch,
  VertexOverlap,
  DuplicateEdge,
  SelfLoop,
  NotAllowed,
  ClosureViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every failure the library reports. `items` carries
// the offending vertices/edges/tuples (already rendered as strings) when the
// error has a natural list payload.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, std::string message, std::vector<std::string> items = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& items() const noexcept { return items_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> items_;
};

}  // namespace rph
