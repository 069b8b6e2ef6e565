#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqcc/operators.hpp"
#include "gqcc/spectrum.hpp"

namespace gqcc {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string observed;
  std::string expected;
};

enum class IsomorphismStatus { Verified, DimensionOnly, Failed };
std::string_view to_string(IsomorphismStatus s) noexcept;

struct CorrespondenceReport {
  std::string graph_id;
  std::string parameter;
  ArithmeticMode mode = ArithmeticMode::Exact;
  std::optional<std::size_t> transfer_dim;
  std::optional<std::size_t> edge_dim;
  std::optional<std::size_t> vertex_dim;
  IsomorphismStatus status = IsomorphismStatus::DimensionOnly;
  std::vector<Assertion> assertions;

  bool passed() const;
  void expect(std::string name, bool ok, std::string observed, std::string expected);
};

namespace detail {
template <class T>
void require_generic_parameter(const T& z) {
  if (is_zero(z)) throw ZeroParameter("spectral parameter must be nonzero");
  const T one = one_like(z);
  if (is_zero(z - one) || is_zero(z + one))
    throw ExceptionalParameter("the vertex correspondence excludes z = +1 and z = -1");
}
}  // namespace detail

/// Edge equalizer -> vertex equalizer: S(x) = sum over edges e leaving x of f(e).
template <class T>
Vector<T> map_edge_to_vertex(const Graph& g, const T& z, const Vector<T>& f) {
  detail::require_generic_parameter(z);
  if (f.size() != g.directed_edge_count()) throw DimensionMismatch("edge function size");
  Vector<T> s(g.vertex_count(), zero_like(z));
  for (const auto& e : g.directed_edges()) s[e.initial] = s[e.initial] + f[e.id];
  return s;
}

/// Vertex equalizer -> edge equalizer: f(e) = (z g(terminal) - g(initial)) / (z^2 - 1).
template <class T>
Vector<T> map_vertex_to_edge(const Graph& g, const T& z, const Vector<T>& gfun) {
  detail::require_generic_parameter(z);
  if (gfun.size() != g.vertex_count()) throw DimensionMismatch("vertex function size");
  const T scale = one_like(z) / (z * z - one_like(z));
  Vector<T> f;
  f.reserve(g.directed_edge_count());
  for (const auto& e : g.directed_edges()) f.push_back((z * gfun[e.terminal] - gfun[e.initial]) * scale);
  return f;
}

/// Edge equalizer -> transfer eigenfunctions at depth 1: f composed with edge reversal.
/// The transfer matrix equals J Delta_E J for the reversal permutation J, so this is an
/// isomorphism {Delta_E = z} -> {L = z} for every z.
template <class T>
Vector<T> map_edge_to_transfer(const Graph& g, const Vector<T>& f) {
  if (f.size() != g.directed_edge_count()) throw DimensionMismatch("edge function size");
  Vector<T> out;
  out.reserve(f.size());
  for (const auto& e : g.directed_edges()) out.push_back(f[e.reversal]);
  return out;
}

/// Exact generic correspondence at z not in {0, 1, -1} over Q, Q(i) or Q(alpha):
/// compares the three equalizer dimensions and verifies both explicit maps and
/// their compositions on the computed bases.
template <class T>
CorrespondenceReport check_generic(const Graph& g, const T& z, ArithmeticMode mode = ArithmeticMode::Exact);

extern template CorrespondenceReport check_generic<Rational>(const Graph&, const Rational&, ArithmeticMode);
extern template CorrespondenceReport check_generic<GaussianRational>(const Graph&, const GaussianRational&,
                                                                      ArithmeticMode);
extern template CorrespondenceReport check_generic<AlgebraicNumber>(const Graph&, const AlgebraicNumber&,
                                                                     ArithmeticMode);

/// Same check in floating point with relative tolerance `tol`.
CorrespondenceReport check_generic_numeric(const Graph& g, Complex z, double tol = kDefaultTolerance);

/// dim{L = z} == dim{Delta_E = z} for any z != 0, with the reversal pairing verified
/// and the depth-2 transfer eigenspace cross-checked against depth 1.
template <class T>
CorrespondenceReport check_exceptional(const Graph& g, const T& z, ArithmeticMode mode = ArithmeticMode::Exact);

extern template CorrespondenceReport check_exceptional<Rational>(const Graph&, const Rational&, ArithmeticMode);
extern template CorrespondenceReport check_exceptional<GaussianRational>(const Graph&, const GaussianRational&,
                                                                          ArithmeticMode);

CorrespondenceReport check_exceptional_numeric(const Graph& g, Complex z, double tol = kDefaultTolerance);

/// Exact check at every root of a square-free factor of the characteristic
/// polynomial, carried out in Q[x]/(factor). Reducible factors are split on the fly;
/// one report per final factor, whose roots all share the dimensions.
struct AlgebraicCheck {
  Polynomial factor;
  CorrespondenceReport report;
};
std::vector<AlgebraicCheck> check_generic_algebraic(const Graph& g, const Polynomial& factor);

struct DimensionFormulaReport {
  std::size_t cyclomatic = 0;
  bool bipartite = false;
  std::size_t dim_plus = 0;   ///< dim{Delta_E = 1}
  std::size_t dim_minus = 0;  ///< dim{Delta_E = -1}
  std::size_t expected_plus = 0;
  std::size_t expected_minus = 0;
  std::vector<Assertion> assertions;
  bool passed() const;
};

/// Predicted dim{Delta_E = 1}, dim{Delta_E = -1} from the cyclomatic number c and
/// bipartiteness: +1 gives c (c+1 when c = 1); -1 gives c when bipartite, c-1 when not,
/// and 2 for a bipartite graph with c = 1.
std::pair<std::size_t, std::size_t> predicted_exceptional_dimensions(std::size_t c, bool bipartite);

DimensionFormulaReport check_dimension_formulas(const Graph& g);

/// For a regular graph, {Delta_X = delta_z} equals the adjacency eigenspace at
/// lambda = z + q/z. Returns false for non-regular graphs.
bool homogeneous_reduction_holds(const Graph& g, const Rational& z);

}  // namespace gqcc
