#include <gtest/gtest.h>

#include <random>

#include "gqcc/generators.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/operators.hpp"
#include "gqcc/path_space.hpp"
#include "support/oracles.hpp"

namespace gqcc {
namespace {

bool is_non_backtracking(const Graph& g, const NbPath& p) {
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    const auto& a = g.edge(p[j]);
    const auto& b = g.edge(p[j + 1]);
    if (a.terminal != b.initial || a.initial == b.terminal) return false;
  }
  return true;
}

TEST(EnumeratePaths, Examples) {
  const Graph tri = cycle_graph(3);
  EXPECT_EQ(enumerate_paths(tri, 1).dimension(), 6u);
  EXPECT_EQ(enumerate_paths(tri, 2).dimension(), 6u);
  EXPECT_EQ(enumerate_paths(complete_graph(4), 2).dimension(), 24u);
  EXPECT_EQ(enumerate_paths(tri, 0).dimension(), 1u);
  EXPECT_THROW(enumerate_paths(tri, 7), DepthCapExceeded);
  EXPECT_EQ(enumerate_paths(tri, 7, 8).dimension(), 6u);
}

TEST(EnumeratePaths, StructureAndCounts) {
  for (const Graph& g : {complete_graph(4), petersen_graph(), random_admissible_graph(8, 3, 4)}) {
    const DepthSpace one = enumerate_paths(g, 1);
    ASSERT_EQ(one.dimension(), g.directed_edge_count());
    for (std::size_t i = 0; i < one.dimension(); ++i) EXPECT_EQ(one.path(i), NbPath{i});
    for (std::size_t n = 2; n <= 4; ++n) {
      const DepthSpace prev = enumerate_paths(g, n - 1);
      const DepthSpace cur = enumerate_paths(g, n);
      std::size_t expected = 0;
      for (const auto& p : prev.basis()) expected += g.branching(g.edge(p.back()).terminal);
      EXPECT_EQ(cur.dimension(), expected);
      EXPECT_EQ(count_paths(g, n), expected);
      EXPECT_TRUE(std::is_sorted(cur.basis().begin(), cur.basis().end()));
      for (const auto& p : cur.basis()) {
        EXPECT_TRUE(is_non_backtracking(g, p));
        EXPECT_NO_THROW(prev.index_of(NbPath(p.begin(), p.end() - 1)));
      }
    }
  }
}

TEST(TransferMatrix, MatchesDefinitionAndEdgeLaplacianTranspose) {
  for (const Graph& g : {cycle_graph(3), complete_graph(4), complete_bipartite_graph(2, 3),
                         random_admissible_graph(7, 3, 9)}) {
    const ExactMatrix l1 = transfer_matrix(g, 1);
    EXPECT_EQ(l1, transpose(edge_laplacian_matrix(g)));
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_EQ(transfer_matrix(g, n), oracle::transfer_by_definition(g, enumerate_paths(g, n).basis()));
  }
}

TEST(TransferMatrix, ColumnSumsOnRegularGraph) {
  const Graph k4 = complete_graph(4);
  const ExactMatrix l = transfer_matrix(k4, 1);
  for (std::size_t c = 0; c < l.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < l.rows(); ++r) s += l(r, c);
    EXPECT_EQ(s, 2);
  }
}

TEST(TransferMatrix, DepthTwoRankOnK4) {
  const Graph k4 = complete_graph(4);
  const ExactMatrix l2 = transfer_matrix(k4, 2);
  ASSERT_EQ(l2.rows(), 24u);
  EXPECT_EQ(rank_bareiss(transfer_matrix(k4, 1)), 12u);
  EXPECT_EQ(rank_bareiss(l2), 12u);
}

TEST(DepthOf, Examples) {
  const Graph k4 = complete_graph(4);
  const DepthSpace s3 = enumerate_paths(k4, 3);
  EXPECT_EQ(depth_of(s3, Vector<Rational>(s3.dimension(), Rational(5))), 0u);
  Vector<Rational> first(s3.dimension(), Rational(0));
  for (std::size_t i = 0; i < s3.dimension(); ++i)
    if (s3.path(i).front() == 4) first[i] = 1;
  EXPECT_EQ(depth_of(s3, first), 1u);
  Vector<Rational> single(s3.dimension(), Rational(0));
  single[7] = 1;
  EXPECT_EQ(depth_of(s3, single), 3u);
}

TEST(DepthOf, TransferLowersDepth) {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const Graph& g : {cycle_graph(4), complete_graph(4), random_admissible_graph(8, 4, 5)}) {
    for (std::size_t n : {2u, 3u}) {
      const DepthSpace s = enumerate_paths(g, n);
      const ExactMatrix l = transfer_matrix(g, n);
      for (int trial = 0; trial < 10; ++trial) {
        Vector<Rational> f(s.dimension());
        for (auto& x : f) x = d(rng);
        if (depth_of(s, f) != n) continue;
        EXPECT_LE(depth_of(s, multiply(l, f)), n - 1);
      }
      const Vector<Rational> constant(s.dimension(), Rational(1));
      EXPECT_LE(depth_of(s, multiply(l, constant)), 1u);
    }
  }
}

TEST(DepthOf, EigenfunctionsCollapseToDepthOne) {
  for (const Graph& g : {complete_graph(4), complete_bipartite_graph(3, 3), cycle_graph(6)}) {
    for (long z : {1L, -1L, 2L}) {
      const Rational zr(z);
      const std::size_t base = transfer_equalizer(g, zr, 1).dimension();
      for (std::size_t n : {2u, 3u}) {
        const DepthSpace s = enumerate_paths(g, n);
        const auto eq = transfer_equalizer(g, zr, n);
        EXPECT_EQ(eq.dimension(), base) << g.name() << " z=" << z << " n=" << n;
        for (const auto& v : eq.vectors) EXPECT_LE(depth_of(s, v), 1u);
      }
    }
  }
}

}  // namespace
}  // namespace gqcc
