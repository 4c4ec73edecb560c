#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rph/route_simplex.hpp"

namespace rph {

using VertexPath = std::vector<VertexIndex>;

// How the evading condition of a triangle is tested.
//   Literal: alpha's i0->i2 segment meets ALL of beta's vertices only in {i0, i2}.
//   Segment: same, restricted to beta's own i0->i2 segment.
// The two agree on every two-terminal graph; both are kept so that claim can
// be checked.
enum class TriangleSemantics { Literal, Segment };

struct TriangleWitness {
  std::array<VertexIndex, 3> apex_path;
  RouteIndex alpha;  // route reaching i2 from i0 while evading beta
  RouteIndex beta;   // route through i0, i1, i2
  friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

struct RobustPath {
  VertexPath vertices;
  // One witness per consecutive triple, in path order.
  std::vector<TriangleWitness> witnesses;
};

// Elementary allowed p-paths in lexicographic order. p = 0 gives the single
// vertices, p = 1 the simplex edges.
std::vector<VertexPath> allowed_paths(const ColoredRouteSimplex& simplex, std::size_t p);

// Smallest (alpha, beta) in route order, or nullopt when (i0, i1, i2) is not a
// triangle. Throws GraphError(NotAllowed) if the triple is not an allowed 2-path.
std::optional<TriangleWitness> find_triangle_witness(const ColoredRouteSimplex& simplex, VertexIndex i0,
                                                     VertexIndex i1, VertexIndex i2,
                                                     TriangleSemantics semantics = TriangleSemantics::Literal);

// Delta_2 indexed by its first two vertices, for extension lookups.
class TriangleTable {
 public:
  TriangleTable(const ColoredRouteSimplex& simplex, TriangleSemantics semantics);

  // Triangles in lexicographic order.
  const std::vector<RobustPath>& triangles() const noexcept { return triangles_; }
  // Triangles (a, b, *) as (third vertex, witness), ascending by third vertex.
  std::span<const std::pair<VertexIndex, TriangleWitness>> closing(VertexIndex a, VertexIndex b) const;
  std::optional<TriangleWitness> lookup(VertexIndex a, VertexIndex b, VertexIndex c) const;

 private:
  std::vector<RobustPath> triangles_;
  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<std::pair<VertexIndex, TriangleWitness>>> by_prefix_;
};

// Delta_{p+1} from Delta_p: append one vertex and test only the new final triple.
std::vector<RobustPath> extend_robust_paths(const TriangleTable& table, const std::vector<RobustPath>& level);

// Delta_p for p >= 2, lexicographic. Throws GraphError(InvalidInput) for p < 2.
std::vector<RobustPath> robust_paths(const ColoredRouteSimplex& simplex, std::size_t p,
                                     TriangleSemantics semantics = TriangleSemantics::Literal);

// levels[p] = Delta_p for 2 <= p <= p_max; levels[0] and levels[1] are left
// empty. Stops early after the first empty level (every later level is empty
// too), so the result may be shorter than p_max + 1.
std::vector<std::vector<RobustPath>> robust_levels(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                                   TriangleSemantics semantics = TriangleSemantics::Literal);

// Largest p with a non-empty order-p basis (vertices, simplex edges, Delta_p).
std::size_t max_robust_order(const ColoredRouteSimplex& simplex,
                             TriangleSemantics semantics = TriangleSemantics::Literal);

}  // namespace rph
