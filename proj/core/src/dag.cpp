#include "rph/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "rph/error.hpp"

namespace rph {

struct DagBuilderAccess {
  static TwoTerminalDag make(std::vector<std::string> names_in_order,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    TwoTerminalDag dag;
    dag.names_ = std::move(names_in_order);
    for (VertexIndex i = 0; i < dag.names_.size(); ++i) dag.index_.emplace(dag.names_[i], i);
    dag.out_.resize(dag.names_.size());
    dag.in_.resize(dag.names_.size());
    dag.edges_ = edges;
    std::sort(dag.edges_.begin(), dag.edges_.end());
    for (auto [u, v] : dag.edges_) {
      dag.out_[u].push_back(v);
      dag.in_[v].push_back(u);
    }
    for (auto& s : dag.out_) std::sort(s.begin(), s.end());
    for (auto& s : dag.in_) std::sort(s.begin(), s.end());
    return dag;
  }
};

std::optional<VertexIndex> TwoTerminalDag::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex TwoTerminalDag::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw GraphError(ErrorKind::InvalidInput, "unknown vertex", {std::string(name)});
  return *v;
}

std::vector<NamedEdge> TwoTerminalDag::named_edges() const {
  std::vector<NamedEdge> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(names_[u], names_[v]);
  return out;
}

bool TwoTerminalDag::has_edge(VertexIndex from, VertexIndex to) const {
  if (from >= out_.size()) return false;
  const auto& s = out_[from];
  return std::binary_search(s.begin(), s.end(), to);
}

namespace {

std::string edge_label(const std::string& u, const std::string& v) { return u + "->" + v; }

// Kahn's algorithm over the vertices flagged in `keep`, smallest name first.
// Returns the processed order; shorter than the kept count iff there is a cycle.
std::vector<std::size_t> kahn_order(const std::vector<std::string>& names,
                                    const std::vector<std::vector<std::size_t>>& out,
                                    const std::vector<char>& keep) {
  const std::size_t n = names.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (!keep[u]) continue;
    for (auto v : out[u])
      if (keep[v]) ++indegree[v];
  }
  auto by_name = [&](std::size_t a, std::size_t b) { return names[a] > names[b]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_name)> ready(by_name);
  for (std::size_t u = 0; u < n; ++u)
    if (keep[u] && indegree[u] == 0) ready.push(u);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto u = ready.top();
    ready.pop();
    order.push_back(u);
    for (auto v : out[u]) {
      if (!keep[v]) continue;
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  return order;
}

std::vector<char> reachable(std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

BuildResult build_two_terminal(std::span<const std::string> vertices,
                               std::span<const NamedEdge> edges,
                               const std::string& origin,
                               const std::string& destination,
                               BuildMode mode) {
  std::vector<std::string> names(vertices.begin(), vertices.end());
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw GraphError(ErrorKind::InvalidInput, "vertex names must be non-empty");
    if (!index.emplace(names[i], i).second)
      throw GraphError(ErrorKind::InvalidInput, "duplicate vertex name", {names[i]});
  }

  std::vector<std::string> missing;
  if (!index.contains(origin)) missing.push_back(origin);
  if (!index.contains(destination)) missing.push_back(destination);
  if (!missing.empty()) throw GraphError(ErrorKind::MissingTerminal, "terminal not among vertices", missing);
  if (origin == destination)
    throw GraphError(ErrorKind::InvalidInput, "origin and destination must differ", {origin});

  const std::size_t n = names.size();
  std::vector<std::vector<std::size_t>> out(n), in(n);
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (const auto& [u, v] : edges) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end())
      throw GraphError(ErrorKind::InvalidInput, "edge endpoint is not a vertex", {edge_label(u, v)});
    if (iu->second == iv->second) throw GraphError(ErrorKind::SelfLoop, "self-loop", {edge_label(u, v)});
    if (!edge_set.emplace(iu->second, iv->second).second)
      throw GraphError(ErrorKind::DuplicateEdge, "edge listed twice", {edge_label(u, v)});
    out[iu->second].push_back(iv->second);
    in[iv->second].push_back(iu->second);
  }

  // Cycles are rejected before any pruning, including cycles off every route.
  {
    std::vector<char> all(n, 1);
    auto order = kahn_order(names, out, all);
    if (order.size() != n) {
      std::vector<char> done(n, 0);
      for (auto u : order) done[u] = 1;
      std::vector<std::string> stuck;
      for (std::size_t u = 0; u < n; ++u)
        if (!done[u]) stuck.push_back(names[u]);
      std::sort(stuck.begin(), stuck.end());
      throw GraphError(ErrorKind::CycleDetected, "edge relation contains a directed cycle", stuck);
    }
  }

  const std::size_t o = index.at(origin);
  const std::size_t d = index.at(destination);
  auto from_origin = reachable(o, out);
  auto to_destination = reachable(d, in);
  if (!from_origin[d])
    throw GraphError(ErrorKind::NotTwoTerminal, "destination is unreachable from origin",
                     {origin, destination});

  std::vector<char> keep(n, 0);
  for (std::size_t u = 0; u < n; ++u) keep[u] = from_origin[u] && to_destination[u];

  BuildResult result;
  std::vector<std::string> offending;
  for (std::size_t u = 0; u < n; ++u)
    if (!keep[u]) result.pruned_vertices.push_back(names[u]);
  for (auto [u, v] : edge_set)
    if (!keep[u] || !keep[v]) result.pruned_edges.emplace_back(names[u], names[v]);
  std::sort(result.pruned_vertices.begin(), result.pruned_vertices.end());
  std::sort(result.pruned_edges.begin(), result.pruned_edges.end());

  if (mode == BuildMode::Strict && (!result.pruned_vertices.empty() || !result.pruned_edges.empty())) {
    offending = result.pruned_vertices;
    for (const auto& [u, v] : result.pruned_edges) offending.push_back(edge_label(u, v));
    throw GraphError(ErrorKind::NotTwoTerminal, "vertices or edges lie on no origin-destination path",
                     offending);
  }

  auto order = kahn_order(names, out, keep);
  std::vector<std::size_t> position(n, 0);
  std::vector<std::string> ordered_names;
  ordered_names.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    ordered_names.push_back(names[order[i]]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> kept_edges;
  for (auto [u, v] : edge_set)
    if (keep[u] && keep[v]) kept_edges.emplace_back(position[u], position[v]);

  result.dag = DagBuilderAccess::make(std::move(ordered_names), kept_edges);
  return result;
}

TwoTerminalDag edge_graph(const std::string& from, const std::string& to) {
  const std::vector<std::string> vertices{from, to};
  const std::vector<NamedEdge> edges{{from, to}};
  return build_two_terminal(vertices, edges, from, to).dag;
}

namespace {

std::vector<std::string> shared_names(const TwoTerminalDag& a, const TwoTerminalDag& b) {
  std::vector<std::string> shared;
  for (const auto& name : a.names())
    if (b.find(name)) shared.push_back(name);
  std::sort(shared.begin(), shared.end());
  return shared;
}

TwoTerminalDag union_of(const TwoTerminalDag& a, const TwoTerminalDag& b, const std::string& origin,
                        const std::string& destination) {
  std::vector<std::string> vertices = a.names();
  for (const auto& name : b.names())
    if (!a.find(name)) vertices.push_back(name);
  auto edges = a.named_edges();
  auto more = b.named_edges();
  edges.insert(edges.end(), more.begin(), more.end());
  return build_two_terminal(vertices, edges, origin, destination).dag;
}

}  // namespace

TwoTerminalDag series_combine(const TwoTerminalDag& first, const TwoTerminalDag& second) {
  const auto& hinge = first.name(first.destination());
  if (hinge != second.name(second.origin()))
    throw GraphError(ErrorKind::HingeMismatch, "destination of the first graph is not the origin of the second",
                     {hinge, second.name(second.origin())});
  auto shared = shared_names(first, second);
  std::erase(shared, hinge);
  if (!shared.empty())
    throw GraphError(ErrorKind::VertexOverlap, "graphs share vertices besides the hinge", shared);
  return union_of(first, second, first.name(first.origin()), second.name(second.destination()));
}

TwoTerminalDag parallel_combine(const TwoTerminalDag& first, const TwoTerminalDag& second) {
  const auto& o = first.name(first.origin());
  const auto& d = first.name(first.destination());
  if (o != second.name(second.origin()) || d != second.name(second.destination()))
    throw GraphError(ErrorKind::TerminalMismatch, "graphs do not share origin and destination",
                     {o, d, second.name(second.origin()), second.name(second.destination())});
  auto shared = shared_names(first, second);
  std::erase(shared, o);
  std::erase(shared, d);
  if (!shared.empty())
    throw GraphError(ErrorKind::VertexOverlap, "graphs share vertices besides the terminals", shared);
  std::vector<std::string> duplicate;
  for (const auto& [u, v] : first.named_edges()) {
    auto iu = second.find(u);
    auto iv = second.find(v);
    if (iu && iv && second.has_edge(*iu, *iv)) duplicate.push_back(edge_label(u, v));
  }
  if (!duplicate.empty())
    throw GraphError(ErrorKind::DuplicateEdge, "parallel combination would create a multi-edge", duplicate);
  return union_of(first, second, o, d);
}

}  // namespace rph
