#include "gqcc/algebraic.hpp"

namespace gqcc {

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const Polynomial> modulus, Polynomial value)
    : modulus_(std::move(modulus)), value_(std::move(value)) {
  if (modulus_ && value_.degree() >= modulus_->degree()) value_ = value_ % *modulus_;
}

AlgebraicNumber AlgebraicNumber::generator(std::shared_ptr<const Polynomial> modulus) {
  return {std::move(modulus), Polynomial::monomial(1)};
}

AlgebraicNumber AlgebraicNumber::from_rational(std::shared_ptr<const Polynomial> modulus, const Rational& r) {
  return {std::move(modulus), Polynomial::constant(r)};
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (value_.is_zero()) throw std::domain_error("inverse of zero in algebraic extension");
  const ExtendedGcd eg = extended_gcd(value_, *modulus_);
  if (eg.g.degree() > 0) throw ZeroDivisorFound(eg.g);
  return {modulus_, eg.s};
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  if (!modulus_) modulus_ = o.modulus_;
  value_ += o.value_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  if (!modulus_) modulus_ = o.modulus_;
  value_ -= o.value_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  if (!modulus_) modulus_ = o.modulus_;
  value_ *= o.value_;
  if (modulus_ && value_.degree() >= modulus_->degree()) value_ = value_ % *modulus_;
  return *this;
}

}  // namespace gqcc
