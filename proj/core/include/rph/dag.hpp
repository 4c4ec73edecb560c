#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rph {

// Vertices are addressed by their position in the canonical topological order
// of the graph they belong to. Index 0 is always the origin and index
// vertex_count()-1 the destination.
using VertexIndex = std::size_t;

using NamedEdge = std::pair<std::string, std::string>;

enum class BuildMode { Strict, Prune };

/// Validated two-terminal directed acyclic graph.
///
/// Immutable once built. Vertex indices follow Kahn's algorithm with ties
/// broken by lexicographic vertex name, so two graphs with the same vertex
/// names and edge set have identical representations.
class TwoTerminalDag {
 public:
  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  VertexIndex origin() const noexcept { return 0; }
  VertexIndex destination() const noexcept { return names_.size() - 1; }

  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexIndex> find(std::string_view name) const;
  // Throws GraphError(InvalidInput) for unknown names.
  VertexIndex index_of(std::string_view name) const;

  // Sorted by (from, to) in index space.
  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const noexcept { return edges_; }
  std::vector<NamedEdge> named_edges() const;
  bool has_edge(VertexIndex from, VertexIndex to) const;

  // Ascending by index.
  const std::vector<VertexIndex>& successors(VertexIndex v) const { return out_.at(v); }
  const std::vector<VertexIndex>& predecessors(VertexIndex v) const { return in_.at(v); }

  friend bool operator==(const TwoTerminalDag& a, const TwoTerminalDag& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  friend struct DagBuilderAccess;

  std::vector<std::string> names_;
  std::map<std::string, VertexIndex, std::less<>> index_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::vector<std::vector<VertexIndex>> out_;
  std::vector<std::vector<VertexIndex>> in_;
};

struct BuildResult {
  TwoTerminalDag dag;
  // Populated only in prune mode; sorted by name.
  std::vector<std::string> pruned_vertices;
  std::vector<NamedEdge> pruned_edges;
};

// Validates the input and produces the canonical two-terminal graph.
// Errors: InvalidInput (empty/duplicate names, unknown endpoints, o == d),
// SelfLoop, DuplicateEdge, MissingTerminal, CycleDetected, and in strict mode
// NotTwoTerminal listing every vertex and edge that lies on no o->d path.
BuildResult build_two_terminal(std::span<const std::string> vertices,
                               std::span<const NamedEdge> edges,
                               const std::string& origin,
                               const std::string& destination,
                               BuildMode mode = BuildMode::Strict);

// The edge graph K_{from,to}.
TwoTerminalDag edge_graph(const std::string& from, const std::string& to);

TwoTerminalDag series_combine(const TwoTerminalDag& first, const TwoTerminalDag& second);
TwoTerminalDag parallel_combine(const TwoTerminalDag& first, const TwoTerminalDag& second);

}  // namespace rph
