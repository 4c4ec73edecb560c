#pragma once

#include <string>
#include <vector>

#include "rph/rph.hpp"

namespace rph::test {

// Raw graph description, independent of the library's validated types.
struct GraphInput {
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  std::string origin;
  std::string destination;
};

inline TwoTerminalDag build(const GraphInput& g, BuildMode mode = BuildMode::Strict) {
  return build_two_terminal(g.vertices, g.edges, g.origin, g.destination, mode).dag;
}

inline GraphInput k12() { return {{"1", "2"}, {{"1", "2"}}, "1", "2"}; }

inline GraphInput two_edge_path() { return {{"o", "h", "d"}, {{"o", "h"}, {"h", "d"}}, "o", "d"}; }

inline GraphInput diamond() {
  return {{"o", "a", "b", "d"}, {{"o", "a"}, {"a", "d"}, {"o", "b"}, {"b", "d"}}, "o", "d"};
}

// The four-route graph of the worked example: routes (o,1,2,d), (o,1,2,4,d),
// (o,3,4,d), (o,3,5,d).
inline GraphInput four_route() {
  return {{"o", "1", "2", "3", "4", "5", "d"},
          {{"o", "1"}, {"1", "2"}, {"2", "d"}, {"2", "4"}, {"4", "d"}, {"o", "3"}, {"3", "4"}, {"3", "5"}, {"5", "d"}},
          "o",
          "d"};
}

// Wheatstone / Braess pattern.
inline GraphInput braess() {
  return {{"i0", "i1", "i2", "i3"},
          {{"i0", "i1"}, {"i0", "i2"}, {"i1", "i2"}, {"i1", "i3"}, {"i2", "i3"}},
          "i0",
          "i3"};
}

// (K_{i0 i1} -> K_{i1 i3}) || (K_{i0 i2} -> K_{i2 i3}).
inline GraphInput square() {
  return {{"i0", "i1", "i2", "i3"}, {{"i0", "i1"}, {"i1", "i3"}, {"i0", "i2"}, {"i2", "i3"}}, "i0", "i3"};
}

// Three chained triangles over i0..i4: the chain i0->...->i4 plus the
// skip edges i_k -> i_{k+2}.
inline GraphInput chain_triangles() {
  return {{"i0", "i1", "i2", "i3", "i4"},
          {{"i0", "i1"}, {"i1", "i2"}, {"i2", "i3"}, {"i3", "i4"}, {"i0", "i2"}, {"i1", "i3"}, {"i2", "i4"}},
          "i0",
          "i4"};
}

// Chain v0 -> ... -> v_len with skip edges v_k -> v_{k+2}.
GraphInput skip_ladder(std::size_t len);

// Vertex path by names.
VertexPath path_of(const TwoTerminalDag& dag, const std::vector<std::string>& names);
std::vector<std::string> names_of(const TwoTerminalDag& dag, const VertexPath& path);

}  // namespace rph::test
