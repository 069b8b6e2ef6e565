#include "gqcc/graph.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace gqcc {

Graph Graph::from_edges(std::vector<std::string> vertex_ids,
                        const std::vector<std::pair<VertexIndex, VertexIndex>>& edges, std::string name) {
  Graph g;
  g.name_ = std::move(name);
  g.ids_ = std::move(vertex_ids);
  for (VertexIndex v = 0; v < g.ids_.size(); ++v)
    if (!g.index_.emplace(g.ids_[v], v).second) throw Error("duplicate vertex identifier '" + g.ids_[v] + "'");

  std::set<std::pair<VertexIndex, VertexIndex>> directed;
  for (auto [a, b] : edges) {
    if (a >= g.ids_.size() || b >= g.ids_.size()) throw UnknownVertex("edge endpoint out of range");
    if (a == b) throw ValidationError(Axiom::Loop, "loop at vertex '" + g.ids_[a] + "'");
    directed.emplace(a, b);
    directed.emplace(b, a);
  }

  std::map<std::pair<VertexIndex, VertexIndex>, EdgeId> id_of;
  for (const auto& [a, b] : directed) {
    const EdgeId id = g.edges_.size();
    g.edges_.push_back({id, a, b, 0});
    id_of.emplace(std::make_pair(a, b), id);
  }
  g.out_.assign(g.ids_.size(), {});
  for (auto& e : g.edges_) {
    e.reversal = id_of.at({e.terminal, e.initial});
    g.out_[e.initial].push_back(e.id);
  }

  std::vector<std::string> dead;
  for (VertexIndex v = 0; v < g.ids_.size(); ++v)
    if (g.out_[v].size() < 2) dead.push_back(g.ids_[v]);
  if (!dead.empty()) {
    std::string list;
    for (const auto& d : dead) list += (list.empty() ? "" : ", ") + d;
    throw ValidationError(Axiom::DeadEnd, "vertices with fewer than two neighbors: " + list);
  }

  if (g.ids_.empty()) throw ValidationError(Axiom::Disconnected, "graph has no vertices");
  const auto dist = distances_from(g, 0);
  for (VertexIndex v = 0; v < dist.size(); ++v)
    if (dist[v] == static_cast<std::size_t>(-1))
      throw ValidationError(Axiom::Disconnected, "vertex '" + g.ids_[v] + "' unreachable from '" + g.ids_[0] + "'");
  return g;
}

VertexIndex Graph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw UnknownVertex("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

std::vector<VertexIndex> Graph::neighbors(VertexIndex v) const {
  std::vector<VertexIndex> out;
  for (EdgeId e : out_.at(v)) out.push_back(edges_[e].terminal);
  return out;
}

bool Graph::adjacent(VertexIndex a, VertexIndex b) const {
  for (EdgeId e : out_.at(a))
    if (edges_[e].terminal == b) return true;
  return false;
}

std::size_t Graph::branching(VertexIndex v) const {
  if (v >= out_.size()) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
  return out_[v].size() - 1;
}

std::vector<EdgeId> Graph::successors(EdgeId e) const {
  const auto& de = edges_.at(e);
  std::vector<EdgeId> out;
  for (EdgeId s : out_[de.terminal])
    if (s != de.reversal) out.push_back(s);
  return out;
}

std::vector<EdgeId> Graph::predecessors(EdgeId e) const {
  const auto& de = edges_.at(e);
  std::vector<EdgeId> out;
  // predecessors of e are the reversals of the successors of reversal(e)
  for (EdgeId s : out_[de.initial])
    if (s != e) out.push_back(edges_[s].reversal);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<VertexIndex, VertexIndex>> Graph::undirected_edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (const auto& e : edges_)
    if (e.initial < e.terminal) out.emplace_back(e.initial, e.terminal);
  return out;
}

Graph parse_graph(std::string_view text, std::string name) {
  std::vector<std::string> ids;
  std::map<std::string, VertexIndex, std::less<>> index;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = index.emplace(tok, ids.size());
    if (inserted) ids.push_back(tok);
    return it->second;
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b)) throw ParseError(line_no, "expected two vertex tokens");
    if (ls >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    if (a == b) throw ValidationError(Axiom::Loop, "loop at vertex '" + a + "' (line " + std::to_string(line_no) + ")");
    const VertexIndex ia = intern(a);
    const VertexIndex ib = intern(b);
    edges.emplace_back(ia, ib);
  }
  if (edges.empty()) throw ParseError(line_no, "no edges");
  return Graph::from_edges(std::move(ids), edges, std::move(name));
}

Graph load_graph(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str(), std::filesystem::path(path).stem().string());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [a, b] : g.undirected_edges()) out += g.vertex_id(a) + " " + g.vertex_id(b) + "\n";
  return out;
}

std::vector<std::size_t> distances_from(const Graph& g, VertexIndex source) {
  if (source >= g.vertex_count()) throw UnknownVertex("vertex index " + std::to_string(source) + " out of range");
  std::vector<std::size_t> dist(g.vertex_count(), static_cast<std::size_t>(-1));
  std::queue<VertexIndex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const VertexIndex v = q.front();
    q.pop();
    for (EdgeId e : g.out_edges(v)) {
      const VertexIndex w = g.edge(e).terminal;
      if (dist[w] != static_cast<std::size_t>(-1)) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, VertexIndex x, VertexIndex y) {
  if (y >= g.vertex_count()) throw UnknownVertex("vertex index " + std::to_string(y) + " out of range");
  return distances_from(g, x)[y];
}

std::size_t distance(const Graph& g, std::string_view x, std::string_view y) {
  return distance(g, g.index_of(x), g.index_of(y));
}

std::size_t branching(const Graph& g, std::string_view x) { return g.branching(g.index_of(x)); }

std::size_t cyclomatic_number(const Graph& g) { return g.undirected_edge_count() - g.vertex_count() + 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexIndex> q;
    q.push(s);
    while (!q.empty()) {
      const VertexIndex v = q.front();
      q.pop();
      for (VertexIndex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace gqcc
