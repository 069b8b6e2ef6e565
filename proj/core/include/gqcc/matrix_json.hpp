#pragma once

#include <string>

#include "gqcc/matrix.hpp"
#include "gqcc/numeric.hpp"

namespace gqcc {

/// {"rows": n, "cols": m, "mode": "exact", "entries": ["p/q", ...]} (row-major).
std::string to_matrix_json(const ExactMatrix& m);
/// Gaussian entries are written "re,im" with exact rational parts; mode "exact".
std::string to_matrix_json(const GaussianMatrix& m);
/// Entries "re,im" in shortest round-trip decimal form; mode "numeric".
std::string to_matrix_json(const Matrix<Complex>& m);

/// Parsers throw std::invalid_argument on schema violations.
ExactMatrix exact_matrix_from_json(const std::string& text);
Matrix<Complex> numeric_matrix_from_json(const std::string& text);

}  // namespace gqcc
