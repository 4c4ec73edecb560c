#include "rph/braess.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rph/error.hpp"

namespace rph {

std::string_view to_string(BraessCase c) {
  switch (c) {
    case BraessCase::Case1: return "case1";
    case BraessCase::Case2a: return "case2a";
    case BraessCase::Case2b: return "case2b";
  }
  return "unknown";
}

namespace {

struct Classified {
  std::array<VertexIndex, 4> tuple;
  BraessCase label;
};

// Case analysis on the alpha segments alpha1[i0->i2] and alpha2[i1->i3].
// Disjoint: the path itself is the site. Otherwise q is the exit of their last
// shared segment and v the exit of the last segment alpha2[i1->i3] shares with
// beta1[i1->i2]; both lie on alpha2, whose order decides between 2a and 2b.
Classified classify(const ColoredRouteSimplex& simplex, const VertexPath& path, const TriangleWitness& first,
                    const TriangleWitness& second) {
  const auto i0 = path[0], i1 = path[1], i2 = path[2], i3 = path[3];
  const auto& routes = simplex.routes();
  const auto seg1 = route_segment(routes[first.alpha], i0, i2);
  const auto seg2 = route_segment(routes[second.alpha], i1, i3);
  const auto shared = intersect_routes(seg1, seg2);
  if (shared.segments.empty()) return {{i0, i1, i2, i3}, BraessCase::Case1};

  const auto q = shared.segments.back().exit;
  const auto beta_part = route_segment(routes[first.beta], i1, i2);
  const auto with_beta = intersect_routes(seg2, beta_part);
  const auto v = with_beta.segments.back().exit;
  if (*seg2.rank(v) < *seg2.rank(q)) return {{i0, v, q, i3}, BraessCase::Case2a};
  return {{i0, i1, q, i3}, BraessCase::Case2b};
}

}  // namespace

std::vector<BraessSite> braess_sites(const ColoredRouteSimplex& simplex, TriangleSemantics semantics) {
  std::vector<BraessSite> sites;
  std::set<std::array<VertexIndex, 4>> seen;
  for (const auto& path : robust_paths(simplex, 3, semantics)) {
    const auto& first = path.witnesses.at(0);
    const auto& second = path.witnesses.at(1);
    const auto c = classify(simplex, path.vertices, first, second);
    if (!seen.insert(c.tuple).second) continue;
    BraessSite site;
    site.tuple = c.tuple;
    site.source_path = path.vertices;
    site.case_label = c.label;
    site.first = first;
    site.second = second;
    site.verified = verify_braess_embedding(simplex.base(), c.tuple);
    sites.push_back(std::move(site));
  }
  return sites;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const TwoTerminalDag& dag, const std::array<VertexIndex, 4>& t) : dag_(dag), used_(dag.vertex_count(), 0) {
    std::vector<char> branch(dag.vertex_count(), 0);
    for (auto v : t) branch[v] = 1;
    const std::array<std::pair<int, int>, 5> pattern{{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    for (auto [a, b] : pattern) candidates_.push_back(interiors(t[a], t[b], branch));
    // Most constrained pair first.
    std::sort(candidates_.begin(), candidates_.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
  }

  bool run() { return place(0); }

 private:
  // Interiors of every directed from->to path whose interior avoids the branch vertices.
  std::vector<std::vector<VertexIndex>> interiors(VertexIndex from, VertexIndex to, const std::vector<char>& branch) const {
    std::vector<std::vector<VertexIndex>> out;
    std::vector<VertexIndex> interior;
    auto walk = [&](auto&& self, VertexIndex u) -> void {
      for (auto w : dag_.successors(u)) {
        if (w == to) {
          out.push_back(interior);
        } else if (!branch[w] && w < to) {
          interior.push_back(w);
          self(self, w);
          interior.pop_back();
        }
      }
    };
    walk(walk, from);
    return out;
  }

  bool place(std::size_t k) {
    if (k == candidates_.size()) return true;
    for (const auto& interior : candidates_[k]) {
      if (std::any_of(interior.begin(), interior.end(), [&](VertexIndex v) { return used_[v] != 0; })) continue;
      for (auto v : interior) used_[v] = 1;
      const bool ok = place(k + 1);
      for (auto v : interior) used_[v] = 0;
      if (ok) return true;
    }
    return false;
  }

  const TwoTerminalDag& dag_;
  std::vector<char> used_;
  std::vector<std::vector<std::vector<VertexIndex>>> candidates_;
};

}  // namespace

bool verify_braess_embedding(const TwoTerminalDag& dag, const std::array<VertexIndex, 4>& tuple) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (tuple[a] >= dag.vertex_count())
      throw GraphError(ErrorKind::InvalidInput, "embedding vertex out of range", {std::to_string(tuple[a])});
    for (std::size_t b = a + 1; b < 4; ++b)
      if (tuple[a] == tuple[b])
        throw GraphError(ErrorKind::InvalidInput, "embedding vertices must be distinct", {dag.name(tuple[a])});
  }
  return EmbeddingSearch(dag, tuple).run();
}

}  // namespace rph
