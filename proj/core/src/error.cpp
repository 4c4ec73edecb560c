#include "rph/error.hpp"

#include <utility>

namespace rph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotTwoTerminal: return "NotTwoTerminal";
    case ErrorKind::MissingTerminal: return "MissingTerminal";
    case ErrorKind::RouteExplosion: return "RouteExplosion";
    case ErrorKind::NotOnRoute: return "NotOnRoute";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::InconsistentOrder: return "InconsistentOrder";
    case ErrorKind::HingeMismatch: return "HingeMismatch";
    case ErrorKind::TerminalMismatch: return "TerminalMismatch";
    case ErrorKind::VertexOverlap: return "VertexOverlap";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NotAllowed: return "NotAllowed";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose_message(ErrorKind kind, const std::string& message,
                            const std::vector<std::string>& items) {
  std::string out{to_string(kind)};
  out += ": ";
  out += message;
  if (!items.empty()) {
    out += " [";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i != 0) out += ", ";
      out += items[i];
    }
    out += "]";
  }
  return out;
}

}  // namespace

GraphError::GraphError(ErrorKind kind, std::string message, std::vector<std::string> items)
    : std::runtime_error(compose_message(kind, message, items)),
      kind_(kind),
      items_(std::move(items)) {}

}  // namespace rph
