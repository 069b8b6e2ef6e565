#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gqcc/graph.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/numeric.hpp"
#include "gqcc/path_space.hpp"

namespace gqcc {

enum class ArithmeticMode { Exact, Numeric, Algebraic };

std::string_view to_string(ArithmeticMode m) noexcept;

/// Basis of an equalizer {A = B} with provenance. Vectors are linearly independent and
/// satisfy the defining equation exactly (exact/algebraic) or to the mode's tolerance.
template <class T>
struct EqualizerBasis {
  std::string operator_tag;
  std::string parameter;
  ArithmeticMode mode = ArithmeticMode::Exact;
  std::vector<Vector<T>> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

/// Symmetric 0/1 vertex x vertex matrix.
ExactMatrix adjacency_matrix(const Graph& g);

/// Diagonal matrix of branching numbers q_x.
ExactMatrix branching_matrix(const Graph& g);

/// Directed-edge x directed-edge 0/1 matrix with (e, e') = 1 iff e' is a
/// non-backtracking successor of e. Row e sums to q at the terminal vertex of e.
ExactMatrix edge_laplacian_matrix(const Graph& g);

/// M_z with M_z[x][y] = 1 for y ~ x and M_z[x][x] = -(z + q_x / z). Its kernel is the
/// equalizer of the degree-normalized vertex Laplacian and the multiplier
/// (z + q_x/z)/(1 + q_x); the common factor 1/(1 + q_x) cancels.
template <class T>
Matrix<T> vertex_equalizer_matrix(const Graph& g, const T& z) {
  if (is_zero(z)) throw ZeroParameter("vertex equalizer needs z != 0");
  Matrix<T> m = convert(adjacency_matrix(g), z);
  const T inv = one_like(z) / z;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    const T q = FieldTraits<T>::from_rational(z, Rational(static_cast<long>(g.branching(x))));
    m(x, x) = -(z + q * inv);
  }
  return m;
}

/// Exact kernel; rational matrices go through fraction-free elimination.
inline std::vector<Vector<Rational>> exact_nullspace(const ExactMatrix& m, const Rational& /*like*/) {
  return nullspace_bareiss(m);
}
template <class T>
std::vector<Vector<T>> exact_nullspace(const Matrix<T>& m, const T& like) {
  return nullspace_gauss_jordan(m, like);
}

/// Exact kernel wrapped with provenance; every vector is re-checked against `m`.
template <class T>
EqualizerBasis<T> exact_equalizer(const Matrix<T>& m, const T& z, std::string tag,
                                  ArithmeticMode mode = ArithmeticMode::Exact) {
  EqualizerBasis<T> out{std::move(tag), FieldTraits<T>::to_text(z), mode, exact_nullspace(m, z)};
  for (const auto& v : out.vectors)
    if (!all_zero(multiply(m, v))) throw Error("exact kernel vector failed verification");
  return out;
}

/// {Delta_X = delta_z}
template <class T>
EqualizerBasis<T> vertex_equalizer(const Graph& g, const T& z,
                                   ArithmeticMode mode = ArithmeticMode::Exact) {
  return exact_equalizer(vertex_equalizer_matrix(g, z), z, "vertex-equalizer", mode);
}

/// {Delta_E = z}
template <class T>
EqualizerBasis<T> edge_equalizer(const Graph& g, const T& z,
                                 ArithmeticMode mode = ArithmeticMode::Exact) {
  return exact_equalizer(shifted(convert(edge_laplacian_matrix(g), z), z), z, "edge-laplacian", mode);
}

/// {L = z} on depth-n locally constant functions.
template <class T>
EqualizerBasis<T> transfer_equalizer(const Graph& g, const T& z, std::size_t depth = 1,
                                     ArithmeticMode mode = ArithmeticMode::Exact) {
  return exact_equalizer(shifted(convert(transfer_matrix(g, depth), z), z), z,
                         "transfer-depth-" + std::to_string(depth), mode);
}

/// Numeric counterparts: kernel by SVD with relative cutoff `tol`.
EqualizerBasis<Complex> vertex_equalizer_numeric(const Graph& g, Complex z, double tol = kDefaultTolerance);
EqualizerBasis<Complex> edge_equalizer_numeric(const Graph& g, Complex z, double tol = kDefaultTolerance);
EqualizerBasis<Complex> transfer_equalizer_numeric(const Graph& g, Complex z, std::size_t depth = 1,
                                                   double tol = kDefaultTolerance);
/// Wraps nullspace_numeric with provenance.
EqualizerBasis<Complex> numeric_equalizer(const NumericMatrix& m, Complex z, std::string tag);

/// det(I - u * Delta_E), exact.
Rational zeta_determinant(const Graph& g, const Rational& u);

/// (1 - u^2)^(|E| - |V|) * det(I - u A + u^2 Q) with Q = diag(q_x).
Rational zeta_three_term(const Graph& g, const Rational& u);

/// How the two readings of q_x interact with the zeta determinant identity at `u`:
/// q_x = degree - 1 (the one used throughout) versus q_x = degree.
struct BranchingConventionDiagnostic {
  Rational determinant;          ///< det(I - u Delta_E)
  Rational branching_reading;    ///< three-term side with Q = diag(degree - 1)
  Rational neighbor_reading;     ///< three-term side with Q = diag(degree)
  bool branching_matches = false;
  bool neighbor_matches = false;
};
BranchingConventionDiagnostic branching_convention_diagnostic(const Graph& g, const Rational& u);

}  // namespace gqcc
