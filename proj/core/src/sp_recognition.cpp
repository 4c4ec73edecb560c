#include "rph/sp_recognition.hpp"

#include <algorithm>
#include <numeric>

#include "rph/error.hpp"

namespace rph {

DecompositionTree DecompositionTree::edge(std::string from, std::string to) {
  return DecompositionTree{Kind::Edge, std::move(from), std::move(to), {}};
}

DecompositionTree DecompositionTree::series(DecompositionTree first, DecompositionTree second) {
  DecompositionTree node{Kind::Series, first.from, second.to, {}};
  node.children.push_back(std::move(first));
  node.children.push_back(std::move(second));
  return node;
}

DecompositionTree DecompositionTree::parallel(DecompositionTree first, DecompositionTree second) {
  DecompositionTree node{Kind::Parallel, first.from, first.to, {}};
  node.children.push_back(std::move(first));
  node.children.push_back(std::move(second));
  return node;
}

std::size_t DecompositionTree::depth() const {
  std::size_t deepest = 0;
  for (const auto& child : children) deepest = std::max(deepest, child.depth() + 1);
  return deepest;
}

std::size_t DecompositionTree::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t total = 0;
  for (const auto& child : children) total += child.leaf_count();
  return total;
}

namespace {

using Sequence = std::vector<VertexIndex>;

struct Recognizer {
  const TwoTerminalDag& dag;

  std::optional<DecompositionTree> decompose(std::vector<Sequence> routes) const {
    std::sort(routes.begin(), routes.end());
    routes.erase(std::unique(routes.begin(), routes.end()), routes.end());
    const auto o = routes.front().front();
    const auto d = routes.front().back();

    if (routes.size() == 1 && routes.front().size() == 2) return DecompositionTree::edge(dag.name(o), dag.name(d));

    // Series: the earliest interior vertex common to all routes.
    std::vector<std::size_t> hits(dag.vertex_count(), 0);
    for (const auto& r : routes)
      for (std::size_t i = 1; i + 1 < r.size(); ++i) ++hits[r[i]];
    for (VertexIndex v = 0; v < hits.size(); ++v) {
      if (hits[v] != routes.size()) continue;
      std::vector<Sequence> head, tail;
      for (const auto& r : routes) {
        auto at = std::find(r.begin(), r.end(), v);
        head.emplace_back(r.begin(), at + 1);
        tail.emplace_back(at, r.end());
      }
      auto left = decompose(std::move(head));
      if (!left) return std::nullopt;
      auto right = decompose(std::move(tail));
      if (!right) return std::nullopt;
      return DecompositionTree::series(std::move(*left), std::move(*right));
    }

    // Parallel: union routes that share an interior vertex.
    std::vector<std::size_t> parent(routes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::optional<std::size_t>> owner(dag.vertex_count());
    for (std::size_t k = 0; k < routes.size(); ++k) {
      const auto& r = routes[k];
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (owner[r[i]])
          parent[root(k)] = root(*owner[r[i]]);
        else
          owner[r[i]] = k;
      }
    }
    std::vector<std::vector<Sequence>> groups;
    std::vector<std::optional<std::size_t>> group_of(routes.size());
    for (std::size_t k = 0; k < routes.size(); ++k) {
      auto g = root(k);
      if (!group_of[g]) {
        group_of[g] = groups.size();
        groups.emplace_back();
      }
      groups[*group_of[g]].push_back(routes[k]);
    }
    if (groups.size() < 2) return std::nullopt;

    std::optional<DecompositionTree> combined;
    for (auto& group : groups) {
      auto part = decompose(std::move(group));
      if (!part) return std::nullopt;
      combined = combined ? DecompositionTree::parallel(std::move(*combined), std::move(*part)) : std::move(part);
    }
    return combined;
  }
};

}  // namespace

std::optional<DecompositionTree> recognize_series_parallel(const TwoTerminalDag& dag, std::size_t route_cap) {
  std::vector<Sequence> routes;
  for (const auto& r : enumerate_routes(dag, route_cap)) routes.push_back(r.vertices());
  return Recognizer{dag}.decompose(std::move(routes));
}

TwoTerminalDag evaluate_tree(const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::Edge:
      return edge_graph(tree.from, tree.to);
    case DecompositionTree::Kind::Series:
      return series_combine(evaluate_tree(tree.children.at(0)), evaluate_tree(tree.children.at(1)));
    case DecompositionTree::Kind::Parallel:
      return parallel_combine(evaluate_tree(tree.children.at(0)), evaluate_tree(tree.children.at(1)));
  }
  throw GraphError(ErrorKind::InvalidInput, "unknown decomposition node");
}

bool is_sp_via_homology(const ColoredRouteSimplex& simplex, TriangleSemantics semantics) {
  return robust_paths(simplex, 3, semantics).empty();
}

}  // namespace rph
