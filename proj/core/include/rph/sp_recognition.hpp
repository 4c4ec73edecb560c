#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rph/dag.hpp"
#include "rph/robust_paths.hpp"
#include "rph/route.hpp"

namespace rph {

// Series/parallel decomposition of a two-terminal graph into edge graphs.
struct DecompositionTree {
  enum class Kind { Edge, Series, Parallel };

  Kind kind = Kind::Edge;
  std::string from;  // terminals of the subgraph this node stands for
  std::string to;
  std::vector<DecompositionTree> children;  // empty for Edge, two otherwise

  static DecompositionTree edge(std::string from, std::string to);
  static DecompositionTree series(DecompositionTree first, DecompositionTree second);
  static DecompositionTree parallel(DecompositionTree first, DecompositionTree second);

  std::size_t depth() const;
  std::size_t leaf_count() const;
  friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;
};

// Route-partition recursion: split at a vertex shared by every route (series)
// or into groups of routes with pairwise disjoint interiors (parallel).
// Returns nullopt when some component admits neither split and is not a single
// edge. Uses only route enumeration, never the chain-complex code.
std::optional<DecompositionTree> recognize_series_parallel(const TwoTerminalDag& dag,
                                                           std::size_t route_cap = kDefaultRouteCap);

// Rebuilds the graph bottom-up with series_combine / parallel_combine.
TwoTerminalDag evaluate_tree(const DecompositionTree& tree);

// dim Omega_3 == 0.
bool is_sp_via_homology(const ColoredRouteSimplex& simplex,
                        TriangleSemantics semantics = TriangleSemantics::Literal);

}  // namespace rph
