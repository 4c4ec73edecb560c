#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fixtures.hpp"

namespace rph::test {

// Every two-terminal DAG on vertices v0..v{n-1} whose edges go from lower to
// higher label, origin v0 and destination v{n-1}. Each isomorphism class of
// two-terminal DAG on n vertices appears at least once.
std::vector<GraphInput> exhaustive_two_terminal(std::size_t n);

// Random two-terminal DAG with between min_vertices and max_vertices vertices
// (before pruning) and at most max_routes routes. Vertex names are shuffled so
// they do not follow the topological order.
GraphInput random_two_terminal(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                               std::size_t max_routes);

struct SpSample {
  DecompositionTree tree;
  GraphInput graph;
  bool direct_edge = false;  // the graph contains the edge origin->destination
};

// Random series-parallel graph from a random decomposition tree of depth at
// most max_depth. Interior vertex names carry `prefix`; terminals are the
// given names.
SpSample random_sp_graph(std::mt19937_64& rng, const std::string& origin, const std::string& destination,
                         const std::string& prefix, std::size_t max_depth, std::size_t max_routes,
                         bool forbid_direct_edge = false);

GraphInput graph_of_tree(const DecompositionTree& tree);

// Number of origin->destination paths by dynamic programming (saturating).
std::uint64_t count_routes(const GraphInput& g);

}  // namespace rph::test
