#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gqcc/graph.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/numeric.hpp"

namespace gqcc {

/// Matrices up to this size get an exact characteristic polynomial.
inline constexpr std::size_t kExactCharpolyLimit = 60;

/// One distinct eigenvalue with its algebraic multiplicity.
struct SpectralCluster {
  Complex value;
  std::size_t multiplicity = 0;
  /// Set when the eigenvalue is an integer, verified exactly.
  std::optional<long> integer_value;
  /// Exact square-free factor of the characteristic polynomial vanishing at `value`;
  /// all roots of this factor share the multiplicity. Empty in the numeric fallback.
  Polynomial factor;
};

struct Spectrum {
  /// Empty in the numeric fallback.
  Polynomial characteristic;
  std::vector<SpectralCluster> clusters;
  std::string method;  ///< "faddeev-leverrier" or "numeric-eigen"

  std::size_t size() const;
  /// Eigenvalues repeated by multiplicity, in cluster order.
  std::vector<Complex> multiset() const;
};

/// Spectrum of an integer square matrix. Up to kExactCharpolyLimit the characteristic
/// polynomial is exact; multiplicities come from a square-free decomposition and
/// integer roots are confirmed by exact evaluation. Larger matrices fall back to
/// Eigen with exact verification of integer eigenvalue multiplicities.
Spectrum integer_matrix_spectrum(const ExactMatrix& m);

/// Eigenvalues of the edge Laplacian with algebraic multiplicities.
Spectrum edge_spectrum(const Graph& g);

/// Dimension of the generalized eigenspace of m at integer k: stabilized kernel
/// dimension of (m - k)^j, exactly.
std::size_t algebraic_multiplicity(const ExactMatrix& m, long k);

}  // namespace gqcc
