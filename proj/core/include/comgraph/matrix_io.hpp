#pragma once

#include <string>
#include <string_view>

#include "comgraph/matrix.hpp"

namespace comgraph {

// Text literal:
//   matrix <n> over <semiring-name>
//   <n rows of n entries>
// Finite entries are element names; tropical entries are integers, p/q,
// decimals, or -inf. Lines starting with '#' are comments.

/// Semiring name declared in the literal's header line.
std::string matrix_semiring_name(std::string_view text);

/// The header's semiring name must equal s->name().
Matrix parse_matrix_text(std::string_view text, const SemiringPtr& s);
TropicalMatrix parse_tropical_matrix_text(std::string_view text);

Matrix parse_matrix_file(const std::string& path, const SemiringPtr& s);
TropicalMatrix parse_tropical_matrix_file(const std::string& path);

std::string serialize_matrix(const Matrix& m);
std::string serialize_matrix(const TropicalMatrix& m);

std::string read_text_file(const std::string& path);

}  // namespace comgraph
