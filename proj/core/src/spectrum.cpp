#include "gqcc/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "gqcc/operators.hpp"

namespace gqcc {

namespace {

constexpr double kIntegerSnap = 1e-6;
constexpr double kRealSnap = 1e-10;

Complex snap_real(Complex z) {
  if (std::abs(z.imag()) <= kRealSnap * std::max(1.0, std::abs(z.real()))) return {z.real(), 0.0};
  return z;
}

bool cluster_less(const SpectralCluster& a, const SpectralCluster& b) {
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

}  // namespace

std::size_t Spectrum::size() const {
  std::size_t n = 0;
  for (const auto& c : clusters) n += c.multiplicity;
  return n;
}

std::vector<Complex> Spectrum::multiset() const {
  std::vector<Complex> out;
  for (const auto& c : clusters) out.insert(out.end(), c.multiplicity, c.value);
  return out;
}

std::size_t algebraic_multiplicity(const ExactMatrix& m, long k) {
  const ExactMatrix p = shifted(m, Rational(k));
  ExactMatrix power = p;
  std::size_t prev = 0;
  for (std::size_t j = 1; j <= m.rows(); ++j) {
    const std::size_t d = m.cols() - rank_bareiss(power);
    if (j > 1 && d == prev) break;
    prev = d;
    power = multiply(power, p);
  }
  return prev;
}

Spectrum integer_matrix_spectrum(const ExactMatrix& m) {
  if (!m.square()) throw DimensionMismatch("spectrum of a non-square matrix");
  Spectrum s;
  if (m.rows() == 0) return s;

  if (m.rows() <= kExactCharpolyLimit) {
    s.method = "faddeev-leverrier";
    s.characteristic = characteristic_polynomial(m);
    const auto parts = square_free_decomposition(s.characteristic);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Polynomial rest = parts[i];
      if (rest.degree() < 1) continue;
      const std::size_t mult = i + 1;
      for (const auto& r : polynomial_roots(rest)) {
        if (std::abs(r.imag()) > kIntegerSnap) continue;
        const double rounded = std::round(r.real());
        if (std::abs(r.real() - rounded) > kIntegerSnap) continue;
        const long k = static_cast<long>(rounded);
        if (sgn(rest.evaluate(Rational(k))) != 0) continue;
        rest = rest / Polynomial::linear_root(Rational(k));
        s.clusters.push_back({Complex(static_cast<double>(k), 0.0), mult, k, Polynomial::linear_root(Rational(k))});
      }
      if (rest.degree() < 1) continue;
      for (const auto& r : polynomial_roots(rest)) s.clusters.push_back({snap_real(r), mult, std::nullopt, rest});
    }
  } else {
    s.method = "numeric-eigen";
    auto values = eigenvalues_numeric(m);
    std::vector<bool> used(values.size(), false);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (used[i]) continue;
      Complex sum = 0;
      std::size_t count = 0;
      for (std::size_t j = i; j < values.size(); ++j)
        if (!used[j] && std::abs(values[j] - values[i]) < kIntegerSnap * 100) {
          used[j] = true;
          sum += values[j];
          ++count;
        }
      const Complex mean = sum / static_cast<double>(count);
      const double rounded = std::round(mean.real());
      if (std::abs(mean.imag()) < 1e-4 && std::abs(mean.real() - rounded) < 1e-4) {
        const long k = static_cast<long>(rounded);
        s.clusters.push_back({Complex(rounded, 0.0), algebraic_multiplicity(m, k), k, {}});
      } else {
        s.clusters.push_back({snap_real(mean), count, std::nullopt, {}});
      }
    }
  }
  std::sort(s.clusters.begin(), s.clusters.end(), cluster_less);
  return s;
}

Spectrum edge_spectrum(const Graph& g) { return integer_matrix_spectrum(edge_laplacian_matrix(g)); }

}  // namespace gqcc
