#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include "gqcc/algebraic.hpp"
#include "gqcc/rational.hpp"

namespace gqcc {

/// Scalar types usable by the generic matrix code. Constants are produced from a
/// sample element because algebraic numbers carry their modulus at runtime.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& /*like*/, const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string to_text(const Rational& x) { return to_pq_string(x); }
  static constexpr bool exact = true;
};

template <>
struct FieldTraits<GaussianRational> {
  static GaussianRational from_rational(const GaussianRational& /*like*/, const Rational& r) { return r; }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static std::string to_text(const GaussianRational& x) { return to_string(x); }
  static constexpr bool exact = true;
};

template <>
struct FieldTraits<AlgebraicNumber> {
  static AlgebraicNumber from_rational(const AlgebraicNumber& like, const Rational& r) {
    return AlgebraicNumber::from_rational(like.modulus(), r);
  }
  static bool is_zero(const AlgebraicNumber& x) { return x.is_zero(); }
  static std::string to_text(const AlgebraicNumber& x) { return x.value().to_string('a'); }
  static constexpr bool exact = true;
};

template <>
struct FieldTraits<std::complex<double>> {
  static std::complex<double> from_rational(const std::complex<double>& /*like*/, const Rational& r) {
    return {r.get_d(), 0.0};
  }
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }
  static std::string to_text(const std::complex<double>& x);
  static constexpr bool exact = false;
};

/// Maps GMP expression-template types back to their value type.
template <class T>
struct ScalarOf {
  using type = T;
};
template <class U>
struct ScalarOf<__gmp_expr<mpq_t, U>> {
  using type = Rational;
};
template <class T>
using scalar_of_t = typename ScalarOf<T>::type;

template <class T>
scalar_of_t<T> zero_like(const T& like) {
  using S = scalar_of_t<T>;
  return FieldTraits<S>::from_rational(S(like), 0);
}
template <class T>
scalar_of_t<T> one_like(const T& like) {
  using S = scalar_of_t<T>;
  return FieldTraits<S>::from_rational(S(like), 1);
}
template <class T>
bool is_zero(const T& x) {
  using S = scalar_of_t<T>;
  if constexpr (std::is_same_v<S, T>)
    return FieldTraits<S>::is_zero(x);
  else
    return FieldTraits<S>::is_zero(S(x));
}

/// x^k for any integer k (x != 0 when k < 0).
template <class T>
T integer_power(const T& x, long k) {
  T base = x;
  if (k < 0) base = one_like(x) / x;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  T acc = one_like(x);
  while (e != 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return acc;
}

}  // namespace gqcc
