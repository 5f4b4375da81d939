#pragma once

// Text formats for matrices and vectors.
//
// CSV: n rows of n comma-separated values, each a decimal or a "p/q"
// fraction; blank lines and lines starting with '#' are ignored.
// JSON: {"n": 3, "entries": [[...], ...]} and {"weights": [...]}; values
// may be numbers or fraction strings.

#include <filesystem>
#include <string>
#include <string_view>

#include "effvec/pcm.hpp"

namespace effvec {

/// Parses "1.25", "-3e2", "9/5" or "1/1.1". A fraction whose numerator and
/// denominator reduce to integers below 2^53 is converted with a single
/// rounding. Throws ParseError.
double parse_number(std::string_view token);

RawMatrix parse_matrix_csv(std::string_view text);
RawMatrix parse_matrix_json(std::string_view text);

/// Comma-separated weights, e.g. "4/3,7/6,1".
PriorityVector parse_vector_list(std::string_view text);
/// {"weights": [...]}, or a bare JSON array.
PriorityVector parse_vector_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

/// Reads a matrix file (".json" as JSON, anything else as CSV) and validates it.
PCMatrix read_matrix_file(const std::filesystem::path& path);

/// `%.{digits}g`. 17 digits round-trip every double.
std::string format_number(double x, int digits = 17);

std::string matrix_to_csv(const PCMatrix& a, int digits = 17);
std::string matrix_to_json(const PCMatrix& a, int digits = 17);
std::string vector_to_json(const PriorityVector& w, int digits = 17);

}  // namespace effvec
