#pragma once

#include <cstddef>
#include <vector>

#include "gqcc/matrix.hpp"
#include "gqcc/polynomial.hpp"

namespace gqcc {

template <class T>
struct RowEchelon {
  Matrix<T> reduced;                    ///< reduced row echelon form
  std::vector<std::size_t> pivot_cols;  ///< pivot column of row i
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form over an exact field.
/// The first nonzero entry in each column is the pivot, so the result is deterministic.
template <class T>
RowEchelon<T> gauss_jordan(Matrix<T> m) {
  RowEchelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const T inv = one_like(m(r, c)) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - factor * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Basis of the right kernel read off the reduced echelon form: one vector per free
/// column, with 1 in that column and 0 in every other free column.
template <class T>
std::vector<Vector<T>> kernel_from_echelon(const RowEchelon<T>& e, const T& like) {
  const auto& m = e.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(m.cols(), zero_like(like));
    v[f] = one_like(like);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::vector<Vector<T>> nullspace_gauss_jordan(const Matrix<T>& m, const T& like) {
  return kernel_from_echelon(gauss_jordan(m), like);
}

template <class T>
std::size_t rank_gauss_jordan(const Matrix<T>& m) {
  return gauss_jordan(m).rank();
}

/// Kernel basis of a rational matrix by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix followed by exact back substitution. The basis is the
/// same reduced basis that Gauss-Jordan produces.
std::vector<Vector<Rational>> nullspace_bareiss(const ExactMatrix& m);

std::size_t rank_bareiss(const ExactMatrix& m);

/// Determinant by fraction-free elimination.
Rational determinant(const ExactMatrix& m);

/// det(x I - m) by Faddeev-LeVerrier; integer matrices take an mpz fast path.
Polynomial characteristic_polynomial(const ExactMatrix& m);

/// Vectors are linearly independent (exact rank test).
template <class T>
bool linearly_independent(const std::vector<Vector<T>>& vs) {
  if (vs.empty()) return true;
  if (vs.front().empty()) return false;
  Matrix<T> m(vs.size(), vs.front().size(), zero_like(vs.front().front()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
  return gauss_jordan(std::move(m)).rank() == vs.size();
}

ExactMatrix identity_matrix(std::size_t n);

}  // namespace gqcc
