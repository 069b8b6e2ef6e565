#include "gqcc/generators.hpp"

#include <random>
#include <set>
#include <string>

namespace gqcc {

namespace {

std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

// Uniform draw in [0, bound) with a fixed reduction so results do not depend on the
// standard library's distribution implementation.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(numbered_ids(n), edges, "C" + std::to_string(n));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(numbered_ids(n), edges, "K" + std::to_string(n));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(numbered_ids(a + b), edges, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph petersen_graph() {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(numbered_ids(10), edges, "petersen");
}

Graph random_admissible_graph(std::size_t n, std::size_t target_cyclomatic, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random admissible graph needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::set<std::pair<VertexIndex, VertexIndex>> edges;
  std::vector<std::size_t> degree(n, 0);
  auto add = [&](VertexIndex a, VertexIndex b) {
    edges.emplace(std::min(a, b), std::max(a, b));
    ++degree[a];
    ++degree[b];
  };
  auto has = [&](VertexIndex a, VertexIndex b) { return edges.count({std::min(a, b), std::max(a, b)}) != 0; };

  for (VertexIndex v = 1; v < n; ++v) add(draw(rng, v), v);

  const std::size_t max_edges = n * (n - 1) / 2;
  while (edges.size() < max_edges) {
    std::vector<VertexIndex> leaves;
    for (VertexIndex v = 0; v < n; ++v)
      if (degree[v] < 2) leaves.push_back(v);
    const std::size_t c = edges.size() - n + 1;
    if (leaves.empty() && c >= target_cyclomatic) break;

    VertexIndex a = 0;
    std::vector<VertexIndex> partners;
    if (!leaves.empty()) {
      a = leaves[draw(rng, leaves.size())];
      for (VertexIndex v : leaves)
        if (v != a && !has(a, v)) partners.push_back(v);
    } else {
      a = draw(rng, n);
    }
    if (partners.empty())
      for (VertexIndex v = 0; v < n; ++v)
        if (v != a && !has(a, v)) partners.push_back(v);
    if (partners.empty()) continue;  // a is saturated; draw again
    add(a, partners[draw(rng, partners.size())]);
  }
  std::vector<std::pair<VertexIndex, VertexIndex>> list(edges.begin(), edges.end());
  return Graph::from_edges(numbered_ids(n), list,
                           "random-n" + std::to_string(n) + "-c" + std::to_string(target_cyclomatic) + "-s" +
                               std::to_string(seed));
}

}  // namespace gqcc
