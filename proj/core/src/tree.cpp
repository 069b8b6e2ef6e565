#include "gqcc/tree.hpp"

#include <random>
#include <stdexcept>

namespace gqcc {

TreeBall TreeBall::build(const Graph& g, VertexIndex base, std::size_t radius, std::size_t node_cap) {
  if (base >= g.vertex_count()) throw UnknownVertex("base vertex index " + std::to_string(base) + " out of range");
  if (radius < 2) throw std::invalid_argument("tree ball radius must be at least 2");
  TreeBall ball;
  ball.base_ = base;
  ball.radius_ = radius;
  ball.nodes_.push_back({kNoNode, 0, base, g.branching(base), {}, {}});
  ball.depth_end_.push_back(1);
  std::size_t layer_begin = 0;
  for (std::size_t d = 1; d <= radius; ++d) {
    const std::size_t layer_end = ball.nodes_.size();
    for (NodeId n = layer_begin; n < layer_end; ++n) {
      const std::vector<EdgeId> next =
          ball.nodes_[n].label.empty() ? g.out_edges(base) : g.successors(ball.nodes_[n].label.back());
      for (EdgeId e : next) {
        if (ball.nodes_.size() >= node_cap)
          throw BallCapExceeded("tree ball exceeds " + std::to_string(node_cap) + " nodes");
        TreeNode child;
        child.parent = n;
        child.depth = d;
        child.projection = g.edge(e).terminal;
        child.branching = g.branching(child.projection);
        child.label = ball.nodes_[n].label;
        child.label.push_back(e);
        ball.nodes_[n].children.push_back(ball.nodes_.size());
        ball.nodes_.push_back(std::move(child));
      }
    }
    layer_begin = layer_end;
    ball.depth_end_.push_back(ball.nodes_.size());
  }
  ball.leaf_index_.assign(ball.nodes_.size(), static_cast<std::size_t>(-1));
  for (NodeId n = layer_begin; n < ball.nodes_.size(); ++n) {
    ball.leaf_index_[n] = ball.leaves_.size();
    ball.leaves_.push_back(n);
  }
  return ball;
}

std::size_t TreeBall::nodes_up_to_depth(std::size_t d) const {
  return depth_end_.at(std::min(d, radius_));
}

std::size_t TreeBall::count_at_depth(std::size_t d) const {
  if (d > radius_) return 0;
  return depth_end_[d] - (d == 0 ? 0 : depth_end_[d - 1]);
}

std::size_t TreeBall::cylinder_index(NodeId leaf) const {
  const std::size_t i = leaf_index_.at(leaf);
  if (i == static_cast<std::size_t>(-1)) throw std::out_of_range("node is not on the boundary sphere");
  return i;
}

TreeEdge TreeBall::edge(TreeEdgeId e) const {
  const NodeId c = e / 2 + 1;
  const NodeId p = nodes_.at(c).parent;
  return e % 2 == 0 ? TreeEdge{p, c} : TreeEdge{c, p};
}

TreeEdgeId TreeBall::edge_between(NodeId from, NodeId to) const {
  if (to != 0 && nodes_.at(to).parent == from) return 2 * (to - 1);
  if (from != 0 && nodes_.at(from).parent == to) return 2 * (from - 1) + 1;
  throw std::out_of_range("nodes are not adjacent");
}

std::size_t TreeBall::edges_up_to_depth(std::size_t d) const { return 2 * (nodes_up_to_depth(d) - 1); }

std::vector<NodeId> TreeBall::neighbors(NodeId n) const {
  std::vector<NodeId> out;
  const auto& node = nodes_.at(n);
  if (node.parent != kNoNode) out.push_back(node.parent);
  out.insert(out.end(), node.children.begin(), node.children.end());
  return out;
}

std::vector<TreeEdgeId> TreeBall::successors(TreeEdgeId e) const {
  const TreeEdge te = edge(e);
  std::vector<TreeEdgeId> out;
  for (NodeId y : neighbors(te.to))
    if (y != te.from) out.push_back(edge_between(te.to, y));
  return out;
}

bool TreeBall::is_ancestor(NodeId ancestor, NodeId n) const {
  const std::size_t target = nodes_.at(ancestor).depth;
  if (nodes_.at(n).depth < target) return false;
  while (nodes_[n].depth > target) n = nodes_[n].parent;
  return n == ancestor;
}

long horocycle_bracket(const TreeBall& ball, NodeId x, NodeId omega) {
  const auto& lx = ball.node(x).label;
  const auto& lw = ball.node(omega).label;
  std::size_t common = 0;
  while (common < lx.size() && common < lw.size() && lx[common] == lw[common]) ++common;
  if (common == lw.size() && lx.size() > lw.size())
    throw IndeterminateWithinRadius("node lies inside the cylinder; the rays meet beyond the ball");
  return 2 * static_cast<long>(common) - static_cast<long>(lx.size());
}

bool in_forward_boundary(const TreeBall& ball, TreeEdgeId e, NodeId omega) {
  const TreeEdge te = ball.edge(e);
  if (ball.node(te.to).parent == te.from) return ball.is_ancestor(te.to, omega);
  return !ball.is_ancestor(te.from, omega);
}

std::vector<TruncatedRay> truncated_rays(const TreeBall& ball, NodeId start) {
  struct Frame {
    NodeId node;
    NodeId prev;
    std::size_t ups;
    TreeEdgeId first;
  };
  std::vector<TruncatedRay> out;
  std::vector<Frame> stack;
  const auto push_moves = [&](const Frame& f, bool first_step) {
    const auto nbrs = ball.neighbors(f.node);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      const NodeId y = *it;
      if (!first_step && y == f.prev) continue;
      const bool up = ball.node(y).depth < ball.node(f.node).depth;
      const TreeEdgeId step = ball.edge_between(f.node, y);
      stack.push_back({y, f.node, f.ups + (up ? 1 : 0), first_step ? step : f.first});
    }
  };
  push_moves({start, kNoNode, 0, 0}, true);
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (ball.node(f.node).depth == ball.radius()) {
      out.push_back({start, f.first, f.node, f.ups});
      continue;
    }
    push_moves(f, false);
  }
  return out;
}

CylinderMeasure<Rational> random_rational_measure(const TreeBall& ball, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CylinderMeasure<Rational> mu;
  mu.mass.reserve(ball.cylinder_count());
  for (std::size_t i = 0; i < ball.cylinder_count(); ++i) {
    const long p = static_cast<long>(rng() % 19) - 9;
    const long q = static_cast<long>(rng() % 9) + 1;
    Rational r(p, q);
    r.canonicalize();
    mu.mass.push_back(r);
  }
  return mu;
}

}  // namespace gqcc
