#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "gqcc/matrix.hpp"

namespace gqcc {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

/// Complex double matrix with the relative singular-value cutoff used for rank decisions.
struct NumericMatrix {
  Eigen::MatrixXcd entries;
  double tolerance = kDefaultTolerance;

  NumericMatrix() = default;
  explicit NumericMatrix(Eigen::MatrixXcd m, double tol = kDefaultTolerance);

  static NumericMatrix from_exact(const ExactMatrix& m, double tol = kDefaultTolerance);
  static NumericMatrix from_gaussian(const GaussianMatrix& m, double tol = kDefaultTolerance);
  static NumericMatrix from_complex(const Matrix<Complex>& m, double tol = kDefaultTolerance);

  std::size_t rows() const { return static_cast<std::size_t>(entries.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(entries.cols()); }
};

struct NumericKernel {
  std::vector<Vector<Complex>> basis;  ///< orthonormal right singular directions
  std::vector<double> singular_values; ///< descending
  double cutoff = 0.0;                 ///< tolerance * sigma_max
};

/// dim = number of singular values below tol * sigma_max, plus cols - rows for wide
/// matrices. A zero matrix has full-dimensional kernel.
NumericKernel nullspace_numeric(const NumericMatrix& m);

/// ||m v||_2 / ||v||_2 (0 for the zero vector).
double relative_residual(const Matrix<Complex>& m, const Vector<Complex>& v);

double norm2(const Vector<Complex>& v);

/// Eigenvalues of a square matrix via Eigen's complex Schur decomposition.
std::vector<Complex> eigenvalues_numeric(const ExactMatrix& m);

}  // namespace gqcc
