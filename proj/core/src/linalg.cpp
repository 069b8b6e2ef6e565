#include "gqcc/linalg.hpp"

#include <numeric>

namespace gqcc {

namespace {

struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivots;
  int sign = 1;
  Rational row_scale_product = 1;
};

// Scales every row by the lcm of its denominators so the matrix becomes integral.
IntegerEchelon integer_rows(const ExactMatrix& m) {
  IntegerEchelon e;
  e.rows.resize(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    e.row_scale_product *= Rational(l);
  }
  return e;
}

// Fraction-free forward elimination; every intermediate entry is a minor of the input.
void bareiss(IntegerEchelon& e, std::size_t cols) {
  auto& a = e.rows;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
}

template <class Int>
Polynomial faddeev_leverrier(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Int>> product(n, std::vector<Int>(n, Int(0)));  // A * M_{k-1}
  std::vector<std::vector<Int>> mk(n, std::vector<Int>(n, Int(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    const Int ck(c[n - k + 1].get_num());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mk[i][j] = product[i][j] + (i == j ? ck : Int(0));
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto& out = product[i];
      std::fill(out.begin(), out.end(), Int(0));
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        const Int& s = a[i][l];
        for (std::size_t j = 0; j < n; ++j)
          if (mk[l][j] != 0) out[j] += s * mk[l][j];
      }
      trace += out[i];
    }
    // exact: the coefficients of an integer matrix's characteristic polynomial are integers
    c[n - k] = Rational(Integer(-trace), Integer(static_cast<long>(k)));
    c[n - k].canonicalize();
    if (c[n - k].get_den() != 1) throw Error("Faddeev-LeVerrier produced a non-integer coefficient");
  }
  return Polynomial(std::move(c));
}

}  // namespace

std::vector<Vector<Rational>> nullspace_bareiss(const ExactMatrix& m) {
  IntegerEchelon e = integer_rows(m);
  bareiss(e, m.cols());
  const auto& u = e.rows;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      const std::size_t pc = e.pivots[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (u[i][j] != 0 && sgn(v[j]) != 0) s += Rational(u[i][j]) * v[j];
      v[pc] = -s / Rational(u[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_bareiss(const ExactMatrix& m) {
  IntegerEchelon e = integer_rows(m);
  bareiss(e, m.cols());
  return e.pivots.size();
}

Rational determinant(const ExactMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerEchelon e = integer_rows(m);
  bareiss(e, m.cols());
  if (e.pivots.size() < m.rows()) return 0;
  Rational det(e.rows.back().back());
  if (e.sign < 0) det = -det;
  return det / e.row_scale_product;
}

Polynomial characteristic_polynomial(const ExactMatrix& m) {
  if (!m.square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  bool integral = true;
  for (const auto& x : m.data()) integral = integral && x.get_den() == 1;
  if (integral) {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num();
    return faddeev_leverrier(a);
  }
  // Rational input: scale to an integer matrix d*m, then p_m(x) = d^{-n} p_{dm}(d x).
  Integer d = 1;
  for (const auto& x : m.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (d / m(i, j).get_den());
  const Polynomial scaled = faddeev_leverrier(a);
  std::vector<Rational> c(n + 1);
  Rational dk = 1;
  const Rational dr(d);
  Rational dn = 1;
  for (std::size_t k = 0; k < n; ++k) dn *= dr;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = scaled.coefficient(static_cast<int>(k)) * dk / dn;
    dk *= dr;
  }
  return Polynomial(std::move(c));
}

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace gqcc
