#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gqcc/graph.hpp"
#include "gqcc/matrix.hpp"

namespace gqcc {

inline constexpr std::size_t kDefaultDepthCap = 6;

/// Non-backtracking path given by its directed-edge ids.
using NbPath = std::vector<EdgeId>;

/// Length-n truncation of the geodesic-ray space: functions of depth <= n are
/// coefficient vectors indexed by `basis`. Depth 0 has the single empty path.
class DepthSpace {
 public:
  DepthSpace(std::size_t depth, std::vector<NbPath> basis);

  std::size_t depth() const { return depth_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<NbPath>& basis() const { return basis_; }
  const NbPath& path(std::size_t i) const { return basis_.at(i); }
  /// Throws std::out_of_range if `p` is not a basis path.
  std::size_t index_of(const NbPath& p) const;

 private:
  std::size_t depth_;
  std::vector<NbPath> basis_;
  std::map<NbPath, std::size_t> index_;
};

/// All non-backtracking paths of length n, lexicographic in edge ids.
/// Throws DepthCapExceeded when n > cap.
DepthSpace enumerate_paths(const Graph& g, std::size_t n, std::size_t cap = kDefaultDepthCap);

/// Number of length-n non-backtracking paths without materializing them.
std::size_t count_paths(const Graph& g, std::size_t n);

/// Matrix of the transfer operator  (Lf)(e1, e2, ...) = sum over non-backtracking
/// predecessors e0 of e1 of f(e0, e1, ...)  acting on depth-n functions; the image has
/// depth max(n-1, 1) and is re-embedded in depth n. For n = 1 this is the transpose
/// of the edge Laplacian.
ExactMatrix transfer_matrix(const Graph& g, std::size_t n, std::size_t cap = kDefaultDepthCap);

/// Least m <= depth such that f is constant on every set of basis paths sharing
/// their first m edges (0 for constants).
template <class T>
std::size_t depth_of(const DepthSpace& space, const Vector<T>& f) {
  if (f.size() != space.dimension()) throw DimensionMismatch("depth_of: size mismatch");
  for (std::size_t m = 0; m < space.depth(); ++m) {
    std::map<NbPath, const T*> seen;
    bool constant = true;
    for (std::size_t i = 0; i < space.dimension() && constant; ++i) {
      const auto& p = space.path(i);
      NbPath prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m));
      auto [it, inserted] = seen.emplace(std::move(prefix), &f[i]);
      if (!inserted && !(*it->second == f[i])) constant = false;
    }
    if (constant) return m;
  }
  return space.depth();
}

/// Lifts a depth-1 function (indexed by directed edge) to depth n: f(e1, ..., en) = g(e1).
template <class T>
Vector<T> lift_from_edges(const DepthSpace& space, const Vector<T>& edge_function) {
  Vector<T> out;
  out.reserve(space.dimension());
  for (const auto& p : space.basis()) out.push_back(edge_function.at(p.front()));
  return out;
}

}  // namespace gqcc
