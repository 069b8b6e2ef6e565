#pragma once

#include <cstddef>
#include <cstdint>

#include "gqcc/graph.hpp"

namespace gqcc {

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

/// Random admissible graph: a random recursive spanning tree on n vertices, then
/// random non-loop, non-duplicate edges (leaf endpoints first) until every degree is
/// at least 2 and the cyclomatic number reaches `target_cyclomatic`. The result may
/// overshoot the target when the leaves alone need more edges. Requires n >= 3.
Graph random_admissible_graph(std::size_t n, std::size_t target_cyclomatic, std::uint64_t seed);

}  // namespace gqcc
