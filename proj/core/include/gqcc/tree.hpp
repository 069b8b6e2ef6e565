#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gqcc/field.hpp"
#include "gqcc/graph.hpp"
#include "gqcc/matrix.hpp"

namespace gqcc {

inline constexpr std::size_t kDefaultBallCap = 100000;

using NodeId = std::size_t;
using TreeEdgeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct TreeNode {
  NodeId parent = kNoNode;
  std::size_t depth = 0;
  VertexIndex projection = 0;   ///< terminal vertex of the path in the quotient
  std::size_t branching = 0;    ///< q at the projected vertex
  std::vector<EdgeId> label;    ///< the non-backtracking path from the base
  std::vector<NodeId> children;
};

/// Directed edge of the tree.
struct TreeEdge {
  NodeId from;
  NodeId to;
};

/// Radius-R ball of the universal covering tree around a base vertex. Nodes are the
/// non-backtracking paths of length <= R starting at the base, in breadth-first order
/// (children by increasing edge id), so the nodes of depth <= d form a prefix.
/// Tree edge 2(c-1) runs parent(c) -> c and 2(c-1)+1 runs c -> parent(c).
class TreeBall {
 public:
  static TreeBall build(const Graph& g, VertexIndex base, std::size_t radius,
                        std::size_t node_cap = kDefaultBallCap);

  VertexIndex base() const { return base_; }
  std::size_t radius() const { return radius_; }
  std::size_t node_count() const { return nodes_.size(); }
  const TreeNode& node(NodeId n) const { return nodes_.at(n); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  /// Nodes of depth <= d (a prefix of the node order).
  std::size_t nodes_up_to_depth(std::size_t d) const;
  std::size_t count_at_depth(std::size_t d) const;

  /// Depth-R nodes; their order defines cylinder indices.
  const std::vector<NodeId>& leaves() const { return leaves_; }
  std::size_t cylinder_count() const { return leaves_.size(); }
  /// Cylinder index of a depth-R node; throws std::out_of_range otherwise.
  std::size_t cylinder_index(NodeId leaf) const;

  std::size_t edge_count() const { return 2 * (nodes_.size() - 1); }
  TreeEdge edge(TreeEdgeId e) const;
  TreeEdgeId edge_between(NodeId from, NodeId to) const;
  /// Tree edges with both endpoints at depth <= d (a prefix of the edge order).
  std::size_t edges_up_to_depth(std::size_t d) const;

  /// Neighbors: parent (if any) then children.
  std::vector<NodeId> neighbors(NodeId n) const;
  /// Non-backtracking successor edges of e.
  std::vector<TreeEdgeId> successors(TreeEdgeId e) const;

  /// `ancestor` is a prefix of (or equal to) `n`.
  bool is_ancestor(NodeId ancestor, NodeId n) const;

 private:
  TreeBall() = default;
  VertexIndex base_ = 0;
  std::size_t radius_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<NodeId> leaves_;
  std::vector<std::size_t> leaf_index_;  // node -> cylinder index or npos
  std::vector<std::size_t> depth_end_;   // depth_end_[d] = nodes_up_to_depth(d)
};

/// Values of a finitely additive measure on the depth-R boundary cylinders.
template <class T>
struct CylinderMeasure {
  Vector<T> mass;  ///< indexed by cylinder index
};

template <class T>
CylinderMeasure<T> uniform_measure(const TreeBall& ball, const T& like) {
  const T each = FieldTraits<T>::from_rational(like, Rational(1, static_cast<long>(ball.cylinder_count())));
  return {Vector<T>(ball.cylinder_count(), each)};
}

template <class T>
CylinderMeasure<T> single_cylinder_measure(const TreeBall& ball, std::size_t cylinder, const T& like) {
  CylinderMeasure<T> m{Vector<T>(ball.cylinder_count(), zero_like(like))};
  m.mass.at(cylinder) = one_like(like);
  return m;
}

/// Seeded random rational masses p/q with |p| <= 9 and 1 <= q <= 9.
CylinderMeasure<Rational> random_rational_measure(const TreeBall& ball, std::uint64_t seed);

/// Mass of the coarser cylinder below `node` (sum over its depth-R descendants).
template <class T>
T cylinder_mass(const TreeBall& ball, const CylinderMeasure<T>& mu, NodeId node, const T& like) {
  T acc = zero_like(like);
  for (std::size_t i = 0; i < ball.cylinder_count(); ++i)
    if (ball.is_ancestor(node, ball.leaves()[i])) acc = acc + mu.mass[i];
  return acc;
}

/// <x, omega> = d(o, y) - d(x, y), where y is where the rays from the base and from x
/// toward the cylinder `omega` meet. Throws IndeterminateWithinRadius when x lies
/// strictly inside the cylinder (the meeting point is beyond the truncation).
long horocycle_bracket(const TreeBall& ball, NodeId x, NodeId omega);

/// Table of z^k for k in [-R, R].
template <class T>
class PowerTable {
 public:
  PowerTable(const T& z, std::size_t radius) : radius_(static_cast<long>(radius)) {
    if (is_zero(z)) throw ZeroParameter("Poisson kernel needs z != 0");
    for (long k = -radius_; k <= radius_; ++k) powers_.push_back(integer_power(z, k));
  }
  const T& operator()(long k) const { return powers_.at(static_cast<std::size_t>(k + radius_)); }

 private:
  long radius_;
  std::vector<T> powers_;
};

/// Scalar Poisson transform sum_omega z^<x,omega> mu(omega) at every node of depth
/// <= R - 1 (indexed by node id).
template <class T>
Vector<T> poisson_transform(const TreeBall& ball, const T& z, const CylinderMeasure<T>& mu) {
  if (mu.mass.size() != ball.cylinder_count()) throw DimensionMismatch("measure size");
  const PowerTable<T> pw(z, ball.radius());
  const std::size_t count = ball.nodes_up_to_depth(ball.radius() - 1);
  Vector<T> out(count, zero_like(z));
  for (NodeId x = 0; x < count; ++x)
    for (std::size_t i = 0; i < ball.cylinder_count(); ++i) {
      if (is_zero(mu.mass[i])) continue;
      out[x] = out[x] + pw(horocycle_bracket(ball, x, ball.leaves()[i])) * mu.mass[i];
    }
  return out;
}

/// Single-node evaluation; throws IndeterminateWithinRadius beyond depth R - 1.
template <class T>
T poisson_transform_at(const TreeBall& ball, const T& z, const CylinderMeasure<T>& mu, NodeId x) {
  if (ball.node(x).depth + 1 > ball.radius())
    throw IndeterminateWithinRadius("Poisson transform evaluated at depth >= R");
  const PowerTable<T> pw(z, ball.radius());
  T acc = zero_like(z);
  for (std::size_t i = 0; i < ball.cylinder_count(); ++i)
    acc = acc + pw(horocycle_bracket(ball, x, ball.leaves()[i])) * mu.mass[i];
  return acc;
}

/// omega lies in the forward boundary of tree edge e: the ray from from(e) toward
/// omega passes through to(e).
bool in_forward_boundary(const TreeBall& ball, TreeEdgeId e, NodeId omega);

/// Edge Poisson transform sum over omega in the forward boundary of e of
/// z^<from(e), omega> mu(omega), for every edge with both endpoints at depth <= R - 1.
template <class T>
Vector<T> edge_poisson_transform(const TreeBall& ball, const T& z, const CylinderMeasure<T>& mu) {
  if (mu.mass.size() != ball.cylinder_count()) throw DimensionMismatch("measure size");
  const PowerTable<T> pw(z, ball.radius());
  const std::size_t count = ball.edges_up_to_depth(ball.radius() - 1);
  Vector<T> out(count, zero_like(z));
  for (TreeEdgeId e = 0; e < count; ++e) {
    const NodeId from = ball.edge(e).from;
    for (std::size_t i = 0; i < ball.cylinder_count(); ++i) {
      const NodeId omega = ball.leaves()[i];
      if (is_zero(mu.mass[i]) || !in_forward_boundary(ball, e, omega)) continue;
      out[e] = out[e] + pw(horocycle_bracket(ball, from, omega)) * mu.mass[i];
    }
  }
  return out;
}

/// Counts of checked locations and failures for an eigen-equation on the ball.
struct EquationCheck {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// sum over tree neighbors y of F(y) == (z + q_x / z) F(x) at every node of depth
/// <= R - 2. `values` must cover all nodes of depth <= R - 1.
template <class T>
EquationCheck check_vertex_equation(const TreeBall& ball, const T& z, const Vector<T>& values) {
  EquationCheck out;
  if (ball.radius() < 2) return out;
  const T inv = one_like(z) / z;
  for (NodeId x = 0; x < ball.nodes_up_to_depth(ball.radius() - 2); ++x) {
    T lhs = zero_like(z);
    for (NodeId y : ball.neighbors(x)) lhs = lhs + values.at(y);
    const T q = FieldTraits<T>::from_rational(z, Rational(static_cast<long>(ball.node(x).branching)));
    ++out.checked;
    if (!(lhs == (z + q * inv) * values[x])) ++out.failures;
  }
  return out;
}

/// sum over non-backtracking successors e' of F(e') == z F(e) at every edge whose
/// terminal node has depth <= R - 2.
template <class T>
EquationCheck check_edge_equation(const TreeBall& ball, const T& z, const Vector<T>& values) {
  EquationCheck out;
  if (ball.radius() < 2) return out;
  for (TreeEdgeId e = 0; e < ball.edge_count(); ++e) {
    if (ball.node(ball.edge(e).to).depth + 2 > ball.radius()) continue;
    T lhs = zero_like(z);
    for (TreeEdgeId s : ball.successors(e)) lhs = lhs + values.at(s);
    ++out.checked;
    if (!(lhs == z * values.at(e))) ++out.failures;
  }
  return out;
}

/// Result of comparing direct kernel summation with the path-space route
/// (pull back along the endpoint map, weight by the kernel, push forward along the
/// initial-vertex / first-edge projection).
template <class T>
struct FactorizationReport {
  Vector<T> vertex_direct;
  Vector<T> vertex_via_paths;
  Vector<T> edge_direct;
  Vector<T> edge_via_paths;
  std::size_t vertex_mismatches = 0;
  std::size_t edge_mismatches = 0;
  bool passed() const { return vertex_mismatches == 0 && edge_mismatches == 0; }
};

/// A truncated ray in the ball: a non-backtracking walk from `start` that ends on the
/// boundary sphere, together with the number of steps it takes toward the base.
struct TruncatedRay {
  NodeId start;
  TreeEdgeId first_edge;
  NodeId endpoint;          ///< depth-R node (the endpoint-map image)
  std::size_t steps_up = 0; ///< the ray turns at depth(start) - steps_up
};

/// Every truncated ray starting at `start`, by depth-first walk.
std::vector<TruncatedRay> truncated_rays(const TreeBall& ball, NodeId start);

template <class T>
FactorizationReport<T> factorization_check(const TreeBall& ball, const T& z, const CylinderMeasure<T>& mu) {
  FactorizationReport<T> rep;
  rep.vertex_direct = poisson_transform(ball, z, mu);
  rep.edge_direct = edge_poisson_transform(ball, z, mu);
  const PowerTable<T> pw(z, ball.radius());
  rep.vertex_via_paths.assign(rep.vertex_direct.size(), zero_like(z));
  rep.edge_via_paths.assign(rep.edge_direct.size(), zero_like(z));
  for (NodeId x = 0; x < rep.vertex_direct.size(); ++x) {
    for (const auto& ray : truncated_rays(ball, x)) {
      // kernel weight read off the walk: up `steps_up` edges, then straight down.
      const long exponent = static_cast<long>(ball.node(x).depth) - 2 * static_cast<long>(ray.steps_up);
      const T weighted = pw(exponent) * mu.mass[ball.cylinder_index(ray.endpoint)];
      rep.vertex_via_paths[x] = rep.vertex_via_paths[x] + weighted;
      if (ray.first_edge < rep.edge_via_paths.size())
        rep.edge_via_paths[ray.first_edge] = rep.edge_via_paths[ray.first_edge] + weighted;
    }
  }
  for (std::size_t i = 0; i < rep.vertex_direct.size(); ++i)
    if (!(rep.vertex_direct[i] == rep.vertex_via_paths[i])) ++rep.vertex_mismatches;
  for (std::size_t i = 0; i < rep.edge_direct.size(); ++i)
    if (!(rep.edge_direct[i] == rep.edge_via_paths[i])) ++rep.edge_mismatches;
  return rep;
}

/// Pulls a quotient vertex function back along the covering projection.
template <class T>
Vector<T> lift_to_ball(const TreeBall& ball, const Vector<T>& quotient_values) {
  Vector<T> out;
  out.reserve(ball.node_count());
  for (const auto& n : ball.nodes()) out.push_back(quotient_values.at(n.projection));
  return out;
}

}  // namespace gqcc
