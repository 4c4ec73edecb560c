#include "fixtures.hpp"

#include <cstdio>

namespace rph::test {

namespace {
std::string ladder_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "v%03zu", k);
  return buf;
}
}  // namespace

GraphInput skip_ladder(std::size_t len) {
  GraphInput g;
  for (std::size_t k = 0; k <= len; ++k) g.vertices.push_back(ladder_name(k));
  for (std::size_t k = 0; k < len; ++k) g.edges.emplace_back(ladder_name(k), ladder_name(k + 1));
  for (std::size_t k = 0; k + 2 <= len; ++k) g.edges.emplace_back(ladder_name(k), ladder_name(k + 2));
  g.origin = ladder_name(0);
  g.destination = ladder_name(len);
  return g;
}

VertexPath path_of(const TwoTerminalDag& dag, const std::vector<std::string>& names) {
  VertexPath out;
  for (const auto& n : names) out.push_back(dag.index_of(n));
  return out;
}

std::vector<std::string> names_of(const TwoTerminalDag& dag, const VertexPath& path) {
  std::vector<std::string> out;
  for (auto v : path) out.push_back(dag.name(v));
  return out;
}

}  // namespace rph::test
