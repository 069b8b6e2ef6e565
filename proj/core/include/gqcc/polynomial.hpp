#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gqcc/rational.hpp"

namespace gqcc {

/// Univariate polynomial over Q, coefficients stored lowest degree first with no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// x - root
  static Polynomial linear_root(const Rational& root);
  static Polynomial monomial(int degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;

  Rational evaluate(const Rational& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

  /// "x^2 + x + 2" style, highest degree first.
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only if both arguments are zero).
Polynomial gcd(Polynomial a, Polynomial b);

struct ExtendedGcd {
  Polynomial g;  ///< monic gcd
  Polynomial s;  ///< s*a + t*b == g
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Yun's square-free decomposition of a non-constant polynomial: returns monic
/// square-free, pairwise coprime a_1..a_k with f = lc(f) * prod a_i^i.
/// Entry i-1 holds a_i (possibly the constant 1).
std::vector<Polynomial> square_free_decomposition(const Polynomial& f);

/// Numerical roots of a square-free polynomial: companion-matrix eigenvalues
/// refined by Newton iteration in long double.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace gqcc
