#pragma once

#include <cstddef>
#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot is the first nonzero entry found in
/// each column scan.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column, with a one in that
/// free position.
std::vector<Vector> nullspace_basis(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws singular_matrix_error for singular input.
Matrix invert(const Matrix& m);
FieldElement determinant(const Matrix& m);
/// Coefficients c_0..c_n of det(t I - m), lowest degree first. Division free,
/// so valid over any commutative ring image of the field.
std::vector<FieldElement> characteristic_polynomial(const Matrix& m);

/// Matrix whose rows are the given vectors (all of length `cols`).
Matrix stack_rows(const std::vector<Vector>& rows, std::size_t cols, Field field);
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t cols, Field field);
/// Independent subset spanning the same space, in RREF-canonical form.
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t cols,
                                    Field field);
bool in_span(const std::vector<Vector>& vectors, const Vector& v, Field field);

}  // namespace bihom
