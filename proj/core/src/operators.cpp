#include "gqcc/operators.hpp"

namespace gqcc {

std::string_view to_string(ArithmeticMode m) noexcept {
  switch (m) {
    case ArithmeticMode::Exact: return "exact";
    case ArithmeticMode::Numeric: return "numeric";
    case ArithmeticMode::Algebraic: return "exact-algebraic";
  }
  return "unknown";
}

ExactMatrix adjacency_matrix(const Graph& g) {
  ExactMatrix a(g.vertex_count(), g.vertex_count(), Rational(0));
  for (const auto& e : g.directed_edges()) a(e.initial, e.terminal) = 1;
  return a;
}

ExactMatrix branching_matrix(const Graph& g) {
  ExactMatrix q(g.vertex_count(), g.vertex_count(), Rational(0));
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) q(v, v) = static_cast<long>(g.branching(v));
  return q;
}

ExactMatrix edge_laplacian_matrix(const Graph& g) {
  ExactMatrix b(g.directed_edge_count(), g.directed_edge_count(), Rational(0));
  for (const auto& e : g.directed_edges())
    for (EdgeId s : g.successors(e.id)) b(e.id, s) = 1;
  return b;
}

EqualizerBasis<Complex> numeric_equalizer(const NumericMatrix& m, Complex z, std::string tag) {
  return {std::move(tag), FieldTraits<Complex>::to_text(z), ArithmeticMode::Numeric, nullspace_numeric(m).basis};
}

EqualizerBasis<Complex> vertex_equalizer_numeric(const Graph& g, Complex z, double tol) {
  return numeric_equalizer(NumericMatrix::from_complex(vertex_equalizer_matrix(g, z), tol), z, "vertex-equalizer");
}

EqualizerBasis<Complex> edge_equalizer_numeric(const Graph& g, Complex z, double tol) {
  NumericMatrix m = NumericMatrix::from_exact(edge_laplacian_matrix(g), tol);
  m.entries.diagonal().array() -= z;
  return numeric_equalizer(m, z, "edge-laplacian");
}

EqualizerBasis<Complex> transfer_equalizer_numeric(const Graph& g, Complex z, std::size_t depth, double tol) {
  NumericMatrix m = NumericMatrix::from_exact(transfer_matrix(g, depth), tol);
  m.entries.diagonal().array() -= z;
  return numeric_equalizer(m, z, "transfer-depth-" + std::to_string(depth));
}

Rational zeta_determinant(const Graph& g, const Rational& u) {
  ExactMatrix m = edge_laplacian_matrix(g);
  for (auto i = 0UL; i < m.rows(); ++i)
    for (auto j = 0UL; j < m.cols(); ++j) m(i, j) = (i == j ? Rational(1) : Rational(0)) - u * m(i, j);
  return determinant(m);
}

namespace {

Rational three_term(const Graph& g, const Rational& u, long q_offset) {
  const auto n = g.vertex_count();
  ExactMatrix m = adjacency_matrix(g);
  const Rational u2 = u * u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = -u * m(i, j);
      if (i == j) v += 1 + u2 * static_cast<long>(g.degree(i) - 1 + q_offset);
      m(i, j) = v;
    }
  const long exponent = static_cast<long>(g.undirected_edge_count()) - static_cast<long>(n);
  // exponent >= 0 because every vertex has degree >= 2
  const Rational base = 1 - u2;
  return integer_power(base, exponent) * determinant(m);
}

}  // namespace

Rational zeta_three_term(const Graph& g, const Rational& u) { return three_term(g, u, 0); }

BranchingConventionDiagnostic branching_convention_diagnostic(const Graph& g, const Rational& u) {
  BranchingConventionDiagnostic d;
  d.determinant = zeta_determinant(g, u);
  d.branching_reading = three_term(g, u, 0);
  d.neighbor_reading = three_term(g, u, 1);
  d.branching_matches = d.determinant == d.branching_reading;
  d.neighbor_matches = d.determinant == d.neighbor_reading;
  return d;
}

}  // namespace gqcc
