#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rph/dag.hpp"

namespace rph {

using RouteIndex = std::size_t;

inline constexpr std::size_t kDefaultRouteCap = 10'000;

// A simple directed vertex sequence with its position ranks. Full routes run
// from origin to destination; segments produced by route_segment() run between
// any two of the route's vertices.
class Route {
 public:
  // `vertex_count` is the size of the ambient vertex index space.
  // Throws GraphError(InvalidInput) on empty sequences, repeated vertices or
  // out-of-range indices.
  Route(std::vector<VertexIndex> vertices, std::size_t vertex_count);

  const std::vector<VertexIndex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexIndex front() const { return vertices_.front(); }
  VertexIndex back() const { return vertices_.back(); }
  std::size_t vertex_count() const noexcept { return rank_.size(); }

  bool contains(VertexIndex v) const noexcept { return v < rank_.size() && rank_[v] >= 0; }
  std::optional<std::size_t> rank(VertexIndex v) const noexcept {
    if (!contains(v)) return std::nullopt;
    return static_cast<std::size_t>(rank_[v]);
  }
  // Membership bitset, 64 vertices per word.
  std::span<const std::uint64_t> mask() const noexcept { return mask_; }

  friend bool operator==(const Route& a, const Route& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<VertexIndex> vertices_;
  std::vector<std::int32_t> rank_;
  std::vector<std::uint64_t> mask_;
};

// Maximal shared sub-segments of two routes, in ascending order.
struct IntersectionDecomposition {
  struct Segment {
    VertexIndex entry;
    VertexIndex exit;
    friend bool operator==(const Segment&, const Segment&) = default;
  };
  std::vector<Segment> segments;
};

// All simple origin->destination paths, lexicographic in canonical vertex order.
// The position of a route in the result is its route index everywhere else.
// Throws GraphError(RouteExplosion) once more than `cap` routes exist.
std::vector<Route> enumerate_routes(const TwoTerminalDag& dag, std::size_t cap = kDefaultRouteCap);

// R^{i->j}. Throws NotOnRoute / OrderViolation.
Route route_segment(const Route& route, VertexIndex i, VertexIndex j);

// Throws InconsistentOrder if the routes order two shared vertices oppositely.
IntersectionDecomposition intersect_routes(const Route& first, const Route& second);

}  // namespace rph
