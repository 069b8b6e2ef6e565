#include "gqcc/matrix_json.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gqcc {

namespace {

using Json = nlohmann::ordered_json;

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <class T, class Fmt>
std::string dump(const Matrix<T>& m, const char* mode, Fmt fmt) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["mode"] = mode;
  Json entries = Json::array();
  for (const auto& x : m.data()) entries.push_back(fmt(x));
  j["entries"] = std::move(entries);
  return j.dump();
}

Json parse_checked(const std::string& text, const char* expected_mode) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw std::invalid_argument("matrix JSON: not an object");
  for (const char* key : {"rows", "cols", "mode", "entries"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("matrix JSON: missing '") + key + "'");
  if (j["mode"] != expected_mode) throw std::invalid_argument(std::string("matrix JSON: mode is not ") + expected_mode);
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (!j["entries"].is_array() || j["entries"].size() != rows * cols)
    throw std::invalid_argument("matrix JSON: entries do not match rows * cols");
  return j;
}

}  // namespace

std::string to_matrix_json(const ExactMatrix& m) {
  return dump(m, "exact", [](const Rational& x) { return to_pq_string(x); });
}

std::string to_matrix_json(const GaussianMatrix& m) {
  return dump(m, "exact", [](const GaussianRational& x) {
    return x.is_real() ? to_pq_string(x.re) : to_pq_string(x.re) + "," + to_pq_string(x.im);
  });
}

std::string to_matrix_json(const Matrix<Complex>& m) {
  return dump(m, "numeric", [](const Complex& x) { return shortest(x.real()) + "," + shortest(x.imag()); });
}

ExactMatrix exact_matrix_from_json(const std::string& text) {
  const Json j = parse_checked(text, "exact");
  ExactMatrix m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), Rational(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = parse_rational(j["entries"][k++].get<std::string>());
  return m;
}

Matrix<Complex> numeric_matrix_from_json(const std::string& text) {
  const Json j = parse_checked(text, "numeric");
  Matrix<Complex> m(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), Complex{});
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = j["entries"][k++].get<std::string>();
      const auto comma = s.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("numeric entry must be 're,im': '" + s + "'");
      m(i, c) = {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    }
  return m;
}

}  // namespace gqcc
