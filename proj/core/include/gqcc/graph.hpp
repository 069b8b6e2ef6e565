#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gqcc/error.hpp"

namespace gqcc {

using VertexIndex = std::size_t;
using EdgeId = std::size_t;

/// One orientation of an undirected edge: initial -> terminal.
struct DirectedEdge {
  EdgeId id;
  VertexIndex initial;
  VertexIndex terminal;
  EdgeId reversal;
};

/// Finite, connected, loop-free graph with every vertex of degree >= 2, stored as a
/// symmetric set of directed edges. Immutable after construction.
///
/// Vertices keep their input identifiers and are indexed in order of first
/// appearance. Directed edges are sorted lexicographically by (initial, terminal).
class Graph {
 public:
  /// Validates and builds. Duplicate pairs (in either orientation) are merged.
  /// Throws ValidationError on a loop, a dead end or a disconnected graph.
  static Graph from_edges(std::vector<std::string> vertex_ids,
                          const std::vector<std::pair<VertexIndex, VertexIndex>>& edges,
                          std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t undirected_edge_count() const { return edges_.size() / 2; }
  std::size_t directed_edge_count() const { return edges_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return ids_.at(v); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  /// Throws UnknownVertex.
  VertexIndex index_of(std::string_view id) const;

  const std::vector<DirectedEdge>& directed_edges() const { return edges_; }
  const DirectedEdge& edge(EdgeId e) const { return edges_.at(e); }
  /// Directed edges with initial vertex v, in id order.
  const std::vector<EdgeId>& out_edges(VertexIndex v) const { return out_.at(v); }
  /// Neighbors of v in increasing index order.
  std::vector<VertexIndex> neighbors(VertexIndex v) const;
  bool adjacent(VertexIndex a, VertexIndex b) const;

  std::size_t degree(VertexIndex v) const { return out_.at(v).size(); }
  /// Non-backtracking continuations through v: degree(v) - 1.
  std::size_t branching(VertexIndex v) const;
  /// Non-backtracking successors e' of e: initial(e') == terminal(e), e' != reversal(e).
  std::vector<EdgeId> successors(EdgeId e) const;
  /// Non-backtracking predecessors e0 of e: terminal(e0) == initial(e), e0 != reversal(e).
  std::vector<EdgeId> predecessors(EdgeId e) const;

  /// The undirected edges as (a, b) with a < b, sorted.
  std::vector<std::pair<VertexIndex, VertexIndex>> undirected_edges() const;

 private:
  Graph() = default;

  std::string name_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
};

/// Parses the edge-list format: one undirected edge per line as two whitespace
/// separated vertex tokens; blank lines and lines starting with '#' are skipped.
/// Throws ParseError or ValidationError.
Graph parse_graph(std::string_view text, std::string name = {});

/// Reads and parses a file; the graph is named after the file stem.
Graph load_graph(const std::string& path);

/// Serializes back to the edge-list format using the original identifiers.
std::string to_edge_list(const Graph& g);

/// Breadth-first distances from `source` to every vertex.
std::vector<std::size_t> distances_from(const Graph& g, VertexIndex source);

/// Throws UnknownVertex if either index is out of range.
std::size_t distance(const Graph& g, VertexIndex x, VertexIndex y);
std::size_t distance(const Graph& g, std::string_view x, std::string_view y);

/// Convenience wrapper; throws UnknownVertex.
std::size_t branching(const Graph& g, std::string_view x);

/// |E| - |V| + 1.
std::size_t cyclomatic_number(const Graph& g);

/// Proper 2-coloring by breadth-first search.
bool is_bipartite(const Graph& g);

}  // namespace gqcc
