#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gqcc/error.hpp"
#include "gqcc/field.hpp"

namespace gqcc {

/// Dense row-major matrix over an exact or floating scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;

template <class T>
using Vector = std::vector<T>;

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows(), m.rows() && m.cols() ? m(0, 0) : T{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

/// Re-expresses a rational matrix over another field; `like` supplies runtime context.
template <class T>
Matrix<T> convert(const ExactMatrix& m, const T& like) {
  Matrix<T> out(m.rows(), m.cols(), zero_like(like));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out(i, j) = FieldTraits<T>::from_rational(like, m(i, j));
  return out;
}

template <class T>
Vector<T> convert(const Vector<Rational>& v, const T& like) {
  Vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(FieldTraits<T>::from_rational(like, x));
  return out;
}

/// m - shift * I
template <class T>
Matrix<T> shifted(Matrix<T> m, const T& shift) {
  if (!m.square()) throw DimensionMismatch("shifted: matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = m(i, i) - shift;
  return m;
}

template <class T>
Vector<T> multiply(const Matrix<T>& m, const Vector<T>& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("multiply: size mismatch");
  Vector<T> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc = v.empty() ? T{} : zero_like(v.front());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) acc = acc + m(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
  T zero = a.rows() && a.cols() ? zero_like(a(0, 0)) : T{};
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
bool all_zero(const Vector<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace gqcc
