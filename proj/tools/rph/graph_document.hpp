#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rph/dag.hpp"

namespace rph::cli {

enum class InputFormat { Json, EdgeList };

// Graph exactly as read from a file, before two-terminal validation. Vertex
// and edge lists are kept sorted so equal graphs compare equal.
struct GraphDocument {
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  std::string origin;
  std::string destination;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

// JSON: {"vertices": [...], "edges": [[u, v], ...], "origin": u, "destination": v}.
// Edge list: one "u v" pair per line, "@origin u" and "@destination v"
// directives, '#' starts a comment. Vertices are the names mentioned.
// Throws GraphError with ParseError, DuplicateEdge or SelfLoop.
GraphDocument parse_graph(std::string_view text, InputFormat format);
GraphDocument load_graph(const std::filesystem::path& path, InputFormat format);

std::string serialize(const GraphDocument& doc, InputFormat format);

GraphDocument document_of(const TwoTerminalDag& dag);

}  // namespace rph::cli
