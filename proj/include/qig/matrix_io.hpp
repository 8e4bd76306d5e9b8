#pragma once

// Matrix interchange format: a JSON document
//   {"n": 2, "re": [[...], [...]], "im": [[...], [...]]}
// with "im" optional (default zero). Inputs are symmetrized on read; a
// symmetrization residual above kSymmetrizationLimit * ||A||_F is an error.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qig/spectral.hpp"

namespace qig {

inline constexpr double kSymmetrizationLimit = 1e-8;

/// Parses a matrix document; errors carry line/column or the offending field.
HermitianOperator parse_matrix(const std::string& text, const std::string& source = "<input>");
HermitianOperator matrix_from_json(const nlohmann::json& doc, const std::string& source = "<input>");
HermitianOperator read_matrix_file(const std::string& path);

/// Round-trip exact serialization (doubles printed with full precision).
nlohmann::json matrix_to_json(const HermitianOperator& a);
std::string format_matrix(const HermitianOperator& a);
void write_matrix_file(const std::string& path, const HermitianOperator& a);

}  // namespace qig
