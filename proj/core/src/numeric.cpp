#include "gqcc/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace gqcc {

NumericMatrix::NumericMatrix(Eigen::MatrixXcd m, double tol) : entries(std::move(m)), tolerance(tol) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("numeric tolerance must be positive");
}

NumericMatrix NumericMatrix::from_exact(const ExactMatrix& m, double tol) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
  return NumericMatrix(std::move(e), tol);
}

NumericMatrix NumericMatrix::from_gaussian(const GaussianMatrix& m, double tol) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = to_complex(m(i, j));
  return NumericMatrix(std::move(e), tol);
}

NumericMatrix NumericMatrix::from_complex(const Matrix<Complex>& m, double tol) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return NumericMatrix(std::move(e), tol);
}

NumericKernel nullspace_numeric(const NumericMatrix& m) {
  NumericKernel out;
  const auto cols = m.entries.cols();
  if (cols == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  out.cutoff = m.tolerance * sigma_max;
  Eigen::Index rank = 0;
  if (sigma_max > 0.0)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) >= out.cutoff) ++rank;
  const auto& v = svd.matrixV();
  for (Eigen::Index k = rank; k < cols; ++k) {
    Vector<Complex> col(static_cast<std::size_t>(cols));
    for (Eigen::Index i = 0; i < cols; ++i) col[static_cast<std::size_t>(i)] = v(i, k);
    out.basis.push_back(std::move(col));
  }
  return out;
}

double norm2(const Vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double relative_residual(const Matrix<Complex>& m, const Vector<Complex>& v) {
  const double n = norm2(v);
  if (n == 0.0) return 0.0;
  return norm2(multiply(m, v)) / n;
}

std::vector<Complex> eigenvalues_numeric(const ExactMatrix& m) {
  if (!m.square()) throw DimensionMismatch("eigenvalues of a non-square matrix");
  const NumericMatrix nm = NumericMatrix::from_exact(m);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(nm.entries, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace gqcc
