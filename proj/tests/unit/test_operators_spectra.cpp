#include <gtest/gtest.h>

#include <random>

#include "gqcc/generators.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/matrix_json.hpp"
#include "gqcc/operators.hpp"
#include "gqcc/spectrum.hpp"

namespace gqcc {
namespace {

std::size_t count_near(const std::vector<Complex>& values, Complex target, double tol = 1e-9) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](Complex v) { return std::abs(v - target) < tol; }));
}

TEST(Adjacency, Examples) {
  const ExactMatrix tri = adjacency_matrix(cycle_graph(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(tri(i, j), i == j ? 0 : 1);
  const ExactMatrix c4 = adjacency_matrix(cycle_graph(4));
  const int first_row[] = {0, 1, 0, 1};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(c4(i, j), first_row[(j + 4 - i) % 4]);
  const ExactMatrix k33 = adjacency_matrix(complete_bipartite_graph(3, 3));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(k33(i, j), (i < 3) != (j < 3) ? 1 : 0);
}

TEST(VertexEqualizer, Examples) {
  const ExactMatrix m = vertex_equalizer_matrix(cycle_graph(3), Rational(1));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m(i, i), -2);
  const auto tri = vertex_equalizer(cycle_graph(3), Rational(1));
  ASSERT_EQ(tri.dimension(), 1u);
  EXPECT_EQ(tri.vectors[0], Vector<Rational>(3, Rational(1)));
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(vertex_equalizer_matrix(k4, Rational(2))(0, 0), -3);
  const auto k4z2 = vertex_equalizer(k4, Rational(2));
  ASSERT_EQ(k4z2.dimension(), 1u);
  EXPECT_EQ(k4z2.vectors[0], Vector<Rational>(4, Rational(1)));
  EXPECT_EQ(vertex_equalizer(k4, Rational(3)).dimension(), 0u);
  EXPECT_THROW(vertex_equalizer_matrix(k4, Rational(0)), ZeroParameter);
  EXPECT_EQ(vertex_equalizer_numeric(k4, Complex(2, 0)).dimension(), 1u);
}

TEST(EdgeLaplacian, RowSumsAndCycles) {
  for (const Graph& g : {cycle_graph(3), complete_graph(4), petersen_graph(), random_admissible_graph(9, 4, 3)}) {
    const ExactMatrix b = edge_laplacian_matrix(g);
    Rational trace = 0;
    for (const auto& e : g.directed_edges()) {
      Rational s = 0;
      for (std::size_t c = 0; c < b.cols(); ++c) s += b(e.id, c);
      EXPECT_EQ(s, static_cast<long>(g.branching(e.terminal)));
      trace += b(e.id, e.id);
    }
    EXPECT_EQ(trace, 0);
  }
  // C_n: a permutation matrix whose cycles both have length n.
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph c = cycle_graph(n);
    const ExactMatrix b = edge_laplacian_matrix(c);
    std::vector<std::size_t> next(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::size_t ones = 0;
      for (std::size_t col = 0; col < b.cols(); ++col)
        if (b(r, col) == 1) {
          next[r] = col;
          ++ones;
        }
      ASSERT_EQ(ones, 1u);
    }
    std::vector<bool> seen(b.rows(), false);
    std::vector<std::size_t> cycles;
    for (std::size_t s = 0; s < b.rows(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t v = s; !seen[v]; v = next[v]) {
        seen[v] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    EXPECT_EQ(cycles, (std::vector<std::size_t>{n, n}));
  }
}

TEST(Nullspace, ExactAndNumericAgreeOnEqualizers) {
  for (const Graph& g : {complete_graph(4), complete_bipartite_graph(3, 3), petersen_graph(), cycle_graph(6)}) {
    for (long z : {-2L, -1L, 1L, 2L, 3L}) {
      EXPECT_EQ(edge_equalizer(g, Rational(z)).dimension(), edge_equalizer_numeric(g, Complex(z)).dimension());
      EXPECT_EQ(vertex_equalizer(g, Rational(z)).dimension(), vertex_equalizer_numeric(g, Complex(z)).dimension());
    }
  }
}

TEST(EdgeSpectrum, CyclesAreDoubledRootsOfUnity) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const Spectrum s = edge_spectrum(cycle_graph(n));
    ASSERT_EQ(s.size(), 2 * n);
    const auto values = s.multiset();
    for (std::size_t k = 0; k < n; ++k) {
      const Complex root = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
      EXPECT_EQ(count_near(values, root), 2u) << "n=" << n << " k=" << k;
    }
  }
}

TEST(EdgeSpectrum, K4) {
  const Graph k4 = complete_graph(4);
  const Spectrum s = edge_spectrum(k4);
  const auto values = s.multiset();
  ASSERT_EQ(values.size(), 12u);
  EXPECT_EQ(count_near(values, 1.0), 3u);
  EXPECT_EQ(count_near(values, -1.0), 2u);
  EXPECT_EQ(count_near(values, 2.0), 1u);
  const Complex r(-0.5, std::sqrt(7.0) / 2.0);
  EXPECT_EQ(count_near(values, r), 3u);
  EXPECT_EQ(count_near(values, std::conj(r)), 3u);
  // Independent route: generalized eigenspace dimensions by exact elimination.
  const ExactMatrix b = edge_laplacian_matrix(k4);
  EXPECT_EQ(algebraic_multiplicity(b, 1), 3u);
  EXPECT_EQ(algebraic_multiplicity(b, -1), 2u);
  EXPECT_EQ(algebraic_multiplicity(b, 2), 1u);
  const Polynomial x2x2(std::vector<Rational>{2, 1, 1});
  bool found = false;
  for (const auto& c : s.clusters)
    if (c.factor == x2x2) {
      found = true;
      EXPECT_EQ(c.multiplicity, 3u);
    }
  EXPECT_TRUE(found);
}

TEST(EdgeSpectrum, PetersenExceptionalMultiplicities) {
  const Spectrum s = edge_spectrum(petersen_graph());
  EXPECT_EQ(s.size(), 30u);
  for (const auto& c : s.clusters) {
    if (c.integer_value == 1) EXPECT_EQ(c.multiplicity, 6u);
    if (c.integer_value == -1) EXPECT_EQ(c.multiplicity, 5u);
  }
  EXPECT_EQ(edge_equalizer(petersen_graph(), Rational(1)).dimension(), 6u);
  EXPECT_EQ(edge_equalizer(petersen_graph(), Rational(-1)).dimension(), 5u);
}

TEST(EdgeSpectrum, ConjugationClosedAndTraceless) {
  for (const Graph& g : {complete_graph(5), petersen_graph(), random_admissible_graph(10, 4, 8)}) {
    const auto values = edge_spectrum(g).multiset();
    Complex sum = 0;
    for (const auto& v : values) {
      sum += v;
      EXPECT_EQ(count_near(values, v, 1e-7), count_near(values, std::conj(v), 1e-7));
    }
    EXPECT_NEAR(std::abs(sum), 0.0, 1e-7);
  }
}

TEST(EdgeSpectrum, NumericFallbackAboveExactLimit) {
  // 3-regular on 22 vertices: 66 directed edges.
  const Graph g = random_admissible_graph(22, 12, 3);
  const Spectrum s = edge_spectrum(g);
  if (g.directed_edge_count() > kExactCharpolyLimit) EXPECT_EQ(s.method, "numeric-eigen");
  EXPECT_EQ(s.size(), g.directed_edge_count());
  for (const auto& c : s.clusters)
    if (c.integer_value == 1) EXPECT_EQ(c.multiplicity, algebraic_multiplicity(edge_laplacian_matrix(g), 1));
}

TEST(Zeta, Examples) {
  for (const Graph& g : {cycle_graph(3), complete_graph(4), petersen_graph()})
    EXPECT_EQ(zeta_determinant(g, Rational(0)), 1);
  EXPECT_EQ(zeta_determinant(cycle_graph(3), Rational(1)), 0);
  const Rational u(1, 3);
  const Graph k4 = complete_graph(4);
  ExactMatrix m = adjacency_matrix(k4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = (i == j ? 1 + 2 * u * u : Rational(0)) - u * m(i, j);
  const Rational one_minus = 1 - u * u;
  EXPECT_EQ(zeta_determinant(k4, u), one_minus * one_minus * determinant(m));
  EXPECT_EQ(zeta_three_term(k4, u), zeta_determinant(k4, u));
}

TEST(Zeta, BranchingConventionDiagnostic) {
  const auto d = branching_convention_diagnostic(cycle_graph(3), Rational(1, 2));
  EXPECT_TRUE(d.branching_matches);
  EXPECT_FALSE(d.neighbor_matches);
}

TEST(MatrixJson, RoundTrip) {
  const ExactMatrix m = vertex_equalizer_matrix(complete_graph(4), Rational(3, 2));
  const std::string text = to_matrix_json(m);
  EXPECT_NE(text.find("\"mode\":\"exact\""), std::string::npos);
  EXPECT_NE(text.find("\"-17/6\""), std::string::npos);
  EXPECT_EQ(exact_matrix_from_json(text), m);
  Matrix<Complex> c(1, 2, Complex(0));
  c(0, 0) = Complex(0.5, -1.25);
  const auto back = numeric_matrix_from_json(to_matrix_json(c));
  EXPECT_EQ(back(0, 0), c(0, 0));
  EXPECT_THROW(exact_matrix_from_json("{\"rows\":1}"), std::invalid_argument);
}

}  // namespace
}  // namespace gqcc
