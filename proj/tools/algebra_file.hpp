#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"

namespace bihom::cli {

inline constexpr int kFormatVersion = 1;

struct AlgebraFile {
  BiHomLieAlgebra algebra;
  std::optional<std::string> name;
  std::optional<std::string> source;
};

/// Throws parse_error naming the offending record, e.g. "brackets[2].value".
AlgebraFile parse_algebra_file(std::string_view text);
/// Canonical form: two-space indentation, nonzero brackets in (i, j, k)
/// order, one trailing newline.
std::string serialize_algebra_file(const AlgebraFile& file);

/// Square matrix file: {"format_version", "field", "dim", "matrix"}.
Matrix parse_matrix_file(std::string_view text);
std::string serialize_matrix_file(const Matrix& m);

std::string read_text_file(const std::string& path);

}  // namespace bihom::cli
