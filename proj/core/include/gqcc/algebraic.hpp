#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqcc/polynomial.hpp"

namespace gqcc {

/// Raised when an element of Q[x]/(m) with m square-free but reducible turns out
/// to be a nonzero zero divisor. `factor` is a proper monic factor of m.
class ZeroDivisorFound : public std::runtime_error {
 public:
  explicit ZeroDivisorFound(Polynomial factor)
      : std::runtime_error("zero divisor in algebraic extension"), factor_(std::move(factor)) {}
  const Polynomial& factor() const noexcept { return factor_; }

 private:
  Polynomial factor_;
};

/// Element of Q[x]/(m) for a monic square-free modulus m. When m is irreducible this
/// is the number field Q(alpha) with alpha a root of m; otherwise inversion may
/// throw ZeroDivisorFound, which lets callers split m and retry (dynamic evaluation).
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(std::shared_ptr<const Polynomial> modulus, Polynomial value);

  /// The class of x, i.e. a root of the modulus.
  static AlgebraicNumber generator(std::shared_ptr<const Polynomial> modulus);
  static AlgebraicNumber from_rational(std::shared_ptr<const Polynomial> modulus, const Rational& r);

  const Polynomial& value() const { return value_; }
  const std::shared_ptr<const Polynomial>& modulus() const { return modulus_; }
  bool is_zero() const { return value_.is_zero(); }

  AlgebraicNumber inverse() const;

  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }
  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a) { return {a.modulus_, -a.value_}; }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.value_ == b.value_;
  }

 private:
  std::shared_ptr<const Polynomial> modulus_;
  Polynomial value_;
};

/// Runs `fn` over Q[x]/(m); each time a zero divisor exposes a factor, the modulus
/// is split and `fn` is re-run on both parts. Returns one result per final factor,
/// in order of discovery (lower-degree-first is not guaranteed).
template <class Result>
std::vector<std::pair<Polynomial, Result>> with_splitting(
    const Polynomial& modulus,
    const std::function<Result(const std::shared_ptr<const Polynomial>&)>& fn) {
  std::vector<std::pair<Polynomial, Result>> out;
  std::vector<Polynomial> pending{modulus.monic()};
  while (!pending.empty()) {
    Polynomial m = std::move(pending.back());
    pending.pop_back();
    auto shared = std::make_shared<const Polynomial>(m);
    try {
      out.emplace_back(m, fn(shared));
    } catch (const ZeroDivisorFound& z) {
      Polynomial g = z.factor().monic();
      pending.push_back((m / g).monic());
      pending.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace gqcc
