#include "gqcc/path_space.hpp"

#include <stdexcept>

namespace gqcc {

DepthSpace::DepthSpace(std::size_t depth, std::vector<NbPath> basis) : depth_(depth), basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::size_t DepthSpace::index_of(const NbPath& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("path is not in the depth space");
  return it->second;
}

DepthSpace enumerate_paths(const Graph& g, std::size_t n, std::size_t cap) {
  if (n > cap)
    throw DepthCapExceeded("depth " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<NbPath> layer{NbPath{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<NbPath> next;
    for (const auto& p : layer) {
      const auto continuations = p.empty() ? [&] {
        std::vector<EdgeId> all;
        for (const auto& e : g.directed_edges()) all.push_back(e.id);
        return all;
      }()
                                           : g.successors(p.back());
      for (EdgeId e : continuations) {
        NbPath q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return DepthSpace(n, std::move(layer));
}

std::size_t count_paths(const Graph& g, std::size_t n) {
  if (n == 0) return 1;
  // number of length-k paths ending in each directed edge
  std::vector<std::size_t> ending(g.directed_edge_count(), 1);
  for (std::size_t len = 2; len <= n; ++len) {
    std::vector<std::size_t> next(ending.size(), 0);
    for (const auto& e : g.directed_edges())
      for (EdgeId s : g.successors(e.id)) next[s] += ending[e.id];
    ending = std::move(next);
  }
  std::size_t total = 0;
  for (auto c : ending) total += c;
  return total;
}

ExactMatrix transfer_matrix(const Graph& g, std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("transfer matrix depth must be positive");
  const DepthSpace space = enumerate_paths(g, n, cap);
  ExactMatrix m(space.dimension(), space.dimension(), Rational(0));
  for (std::size_t row = 0; row < space.dimension(); ++row) {
    const NbPath& p = space.path(row);
    // (Lf)(e1..en) = sum_{e0 -> e1} f(e0, e1, ..., e_{n-1})
    NbPath q(p.size());
    for (std::size_t k = 1; k < p.size(); ++k) q[k] = p[k - 1];
    for (EdgeId e0 : g.predecessors(p.front())) {
      q[0] = e0;
      m(row, space.index_of(q)) += 1;
    }
  }
  return m;
}

}  // namespace gqcc
