#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace rph::test::oracle {

namespace {

std::map<std::string, std::vector<std::string>> successors(const GraphInput& g) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [u, v] : g.edges) succ[u].push_back(v);
  return succ;
}

void dfs(const std::map<std::string, std::vector<std::string>>& succ, const std::string& target, Names& path,
         std::vector<Names>& out) {
  if (path.back() == target) {
    out.push_back(path);
    return;
  }
  auto it = succ.find(path.back());
  if (it == succ.end()) return;
  for (const auto& w : it->second) {
    if (std::find(path.begin(), path.end(), w) != path.end()) continue;
    path.push_back(w);
    dfs(succ, target, path, out);
    path.pop_back();
  }
}

long position(const Names& route, const std::string& v) {
  auto it = std::find(route.begin(), route.end(), v);
  return it == route.end() ? -1 : static_cast<long>(it - route.begin());
}

}  // namespace

std::vector<Names> routes(const GraphInput& g) {
  std::vector<Names> out;
  Names path{g.origin};
  dfs(successors(g), g.destination, path, out);
  return out;
}

std::set<std::pair<std::string, std::string>> simplex_pairs(const std::vector<Names>& routes) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : routes)
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) out.emplace(r[i], r[j]);
  return out;
}

bool is_triangle(const std::vector<Names>& routes, const std::string& a, const std::string& b, const std::string& c,
                 bool segment_only) {
  for (const auto& alpha : routes) {
    const auto pa = position(alpha, a), pc = position(alpha, c);
    if (pa < 0 || pc < 0 || pa >= pc) continue;
    for (const auto& beta : routes) {
      const auto qa = position(beta, a), qb = position(beta, b), qc = position(beta, c);
      if (qa < 0 || qb < 0 || qc < 0 || !(qa < qb && qb < qc)) continue;
      // a and c lie on both; the pair works iff no interior vertex of alpha's
      // a->c segment lies on beta (or on beta's a->c segment).
      bool evades = true;
      for (auto k = pa + 1; evades && k < pc; ++k) {
        const auto q = position(beta, alpha[static_cast<std::size_t>(k)]);
        evades = q < 0 || (segment_only && (q < qa || q > qc));
      }
      if (evades) return true;
    }
  }
  return false;
}

std::vector<std::set<Names>> deltas(const GraphInput& g, std::size_t p_max, bool segment_only) {
  const auto rs = routes(g);
  const auto pairs = simplex_pairs(rs);
  std::map<std::array<std::string, 3>, bool> memo;
  auto triangle = [&](const std::string& a, const std::string& b, const std::string& c) {
    const std::array<std::string, 3> key{a, b, c};
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, is_triangle(rs, a, b, c, segment_only)).first;
    return it->second;
  };
  std::vector<std::set<Names>> out(p_max + 1);
  Names tuple;
  // Every chain of forward pairs up to length p_max + 1; each one is tested
  // from scratch on all of its consecutive triples.
  auto grow = [&](auto&& self) -> void {
    const auto p = tuple.size() - 1;
    if (p >= 2) {
      bool robust = true;
      for (std::size_t k = 0; robust && k + 2 < tuple.size(); ++k) robust = triangle(tuple[k], tuple[k + 1], tuple[k + 2]);
      if (robust) out[p].insert(tuple);
    }
    if (p == p_max) return;
    for (const auto& v : g.vertices) {
      if (!pairs.contains({tuple.back(), v})) continue;
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
    }
  };
  for (const auto& v : g.vertices) {
    tuple = {v};
    grow(grow);
  }
  return out;
}

std::set<Names> delta(const GraphInput& g, std::size_t p, bool segment_only) { return deltas(g, p, segment_only)[p]; }

std::size_t modular_rank(const std::vector<std::vector<std::int64_t>>& input, std::uint64_t prime) {
  if (input.empty()) return 0;
  const auto P = static_cast<__int128>(prime);
  std::vector<std::vector<std::int64_t>> m = input;
  for (auto& row : m)
    for (auto& x : row) x = static_cast<std::int64_t>(((x % static_cast<std::int64_t>(prime)) + static_cast<std::int64_t>(prime)) % static_cast<std::int64_t>(prime));
  auto inverse = [&](std::int64_t a) {
    __int128 result = 1, base = a;
    std::uint64_t e = prime - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return static_cast<std::int64_t>(result);
  };
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const auto inv = inverse(m[rank][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const auto f = static_cast<std::int64_t>(static_cast<__int128>(m[i][c]) * inv % P);
      for (std::size_t j = c; j < cols; ++j) {
        auto v = (static_cast<__int128>(m[i][j]) - static_cast<__int128>(f) * m[rank][j]) % P;
        if (v < 0) v += P;
        m[i][j] = static_cast<std::int64_t>(v);
      }
    }
    ++rank;
  }
  return rank;
}

bool reduces_to_single_edge(const GraphInput& g) {
  // Multigraph as an edge multiset.
  std::multiset<std::pair<std::string, std::string>> edges(g.edges.begin(), g.edges.end());
  bool changed = true;
  while (changed) {
    changed = false;
    // Parallel reduction.
    std::multiset<std::pair<std::string, std::string>> merged;
    for (const auto& e : edges)
      if (!merged.contains(e)) merged.insert(e);
    if (merged.size() != edges.size()) {
      edges = std::move(merged);
      changed = true;
    }
    // Series reduction.
    std::map<std::string, std::vector<std::string>> in, out;
    for (const auto& [u, v] : edges) {
      out[u].push_back(v);
      in[v].push_back(u);
    }
    for (const auto& v : g.vertices) {
      if (v == g.origin || v == g.destination) continue;
      if (in[v].size() == 1 && out[v].size() == 1) {
        const auto u = in[v][0], w = out[v][0];
        edges.erase(edges.find({u, v}));
        edges.erase(edges.find({v, w}));
        edges.emplace(u, w);
        changed = true;
        break;
      }
    }
  }
  return edges.size() == 1 && *edges.begin() == std::make_pair(g.origin, g.destination);
}

bool has_embedding(const GraphInput& g, const std::string& t0, const std::string& t1, const std::string& t2,
                   const std::string& t3) {
  const auto succ = successors(g);
  const std::set<std::string> branch{t0, t1, t2, t3};
  auto paths_between = [&](const std::string& a, const std::string& b) {
    std::vector<Names> out;
    Names path{a};
    auto walk = [&](auto&& self) -> void {
      if (path.back() == b) {
        out.emplace_back(path.begin() + 1, path.end() - 1);
        return;
      }
      if (path.size() > 1 && branch.contains(path.back())) return;
      auto it = succ.find(path.back());
      if (it == succ.end()) return;
      for (const auto& w : it->second) {
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        self(self);
        path.pop_back();
      }
    };
    walk(walk);
    return out;
  };
  const std::vector<std::vector<Names>> options{paths_between(t0, t1), paths_between(t0, t2), paths_between(t1, t2),
                                                paths_between(t1, t3), paths_between(t2, t3)};
  std::set<std::string> used;
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == options.size()) return true;
    for (const auto& interior : options[k]) {
      bool clash = false;
      for (const auto& v : interior) clash = clash || used.contains(v);
      if (clash) continue;
      for (const auto& v : interior) used.insert(v);
      const bool ok = self(self, k + 1);
      for (const auto& v : interior) used.erase(v);
      if (ok) return true;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace rph::test::oracle
