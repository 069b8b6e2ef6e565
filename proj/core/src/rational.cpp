#include "gqcc/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "gqcc/error.hpp"
#include "gqcc/field.hpp"

namespace gqcc {

namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  return Integer(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trimmed(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer p = parse_integer(std::string_view(s).substr(0, slash), s);
    Integer q = parse_integer(std::string_view(s).substr(slash + 1), s);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string_view sv(s);
    const bool negative = !sv.empty() && sv.front() == '-';
    std::string_view int_part = sv.substr(0, dot);
    std::string_view frac = sv.substr(dot + 1);
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not a rational: '" + s + "'");
    Integer num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(negative ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s, s));
}

std::string to_pq_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.re * o.re + o.im * o.im;
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << to_string(g); }

std::string to_string(const GaussianRational& g) {
  if (g.is_real()) return to_pq_string(g.re);
  return to_pq_string(g.re) + "," + to_pq_string(g.im);
}

GaussianRational parse_gaussian(std::string_view text) {
  if (auto comma = text.find(','); comma != std::string_view::npos)
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  return {parse_rational(text), Rational(0)};
}

std::complex<double> to_complex(const GaussianRational& g) { return {g.re.get_d(), g.im.get_d()}; }

std::string FieldTraits<std::complex<double>>::to_text(const std::complex<double>& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", x.real(), x.imag());
  return buf;
}

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::Loop: return "Loop";
    case Axiom::DeadEnd: return "DeadEnd";
    case Axiom::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

ValidationError::ValidationError(Axiom axiom, const std::string& detail)
    : Error(std::string("ValidationError::") + std::string(to_string(axiom)) + ": " + detail), axiom_(axiom) {}

std::string ValidationError::kind() const { return "ValidationError::" + std::string(to_string(axiom_)); }

}  // namespace gqcc
