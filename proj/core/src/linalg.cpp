#include "bihom/linalg.hpp"

#include "bihom/errors.hpp"

namespace bihom {

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t found = r.rows();
    for (std::size_t i = pivot_row; i < r.rows(); ++i) {
      if (!r(i, col).is_zero()) {
        found = i;
        break;
      }
    }
    if (found == r.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(found, j), r(pivot_row, j));
    }
    const FieldElement inv = r(pivot_row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r(i, col).is_zero()) continue;
      const FieldElement factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (!r(pivot_row, j).is_zero()) r(i, j) -= factor * r(pivot_row, j);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace_basis(const Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols(), m.field());
    v[free] = FieldElement::one(m.field());
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      v[red.pivots[r]] = -red.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw dimension_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  const RrefResult red = rref(aug);
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) {
    throw singular_matrix_error("matrix is singular");
  }
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  }
  return inv;
}

FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw dimension_error("determinant of a non-square matrix");
  Matrix r = m;
  const std::size_t n = m.rows();
  FieldElement det = FieldElement::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!r(i, col).is_zero()) {
        found = i;
        break;
      }
    }
    if (found == n) return FieldElement::zero(m.field());
    if (found != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(found, j), r(col, j));
      det = -det;
    }
    det *= r(col, col);
    const FieldElement inv = r(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      const FieldElement factor = r(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r(i, j) -= factor * r(col, j);
    }
  }
  return det;
}

// Berkowitz algorithm: builds the characteristic polynomial of the leading
// principal submatrices by Toeplitz matrix-vector products.
std::vector<FieldElement> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw dimension_error("characteristic polynomial of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  // Coefficients highest degree first while building.
  std::vector<FieldElement> poly{FieldElement::one(f)};
  for (std::size_t k = 0; k < n; ++k) {
    // Submatrix of size k+1; split as [[A, R], [C, a_kk]] with A k×k.
    const FieldElement akk = m(k, k);
    std::vector<FieldElement> col(k), row(k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = m(i, k);
      row[i] = m(k, i);
    }
    // Toeplitz column: 1, -a_kk, -R C, -R A C, -R A^2 C, ...
    std::vector<FieldElement> t;
    t.push_back(FieldElement::one(f));
    t.push_back(-akk);
    Vector power = col;
    for (std::size_t p = 0; p < k; ++p) {
      FieldElement dot = FieldElement::zero(f);
      for (std::size_t i = 0; i < k; ++i) dot += row[i] * power[i];
      t.push_back(-dot);
      Vector next = zero_vector(k, f);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * power[j];
      }
      power = std::move(next);
    }
    std::vector<FieldElement> next_poly(k + 2, FieldElement::zero(f));
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) {
        if (i - j < t.size()) next_poly[i] += t[i - j] * poly[j];
      }
    }
    poly = std::move(next_poly);
  }
  return std::vector<FieldElement>(poly.rbegin(), poly.rend());
}

Matrix stack_rows(const std::vector<Vector>& rows, std::size_t cols, Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw dimension_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t cols, Field field) {
  if (vectors.empty()) return 0;
  return rank(stack_rows(vectors, cols, field));
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t cols,
                                    Field field) {
  if (vectors.empty()) return {};
  const RrefResult red = rref(stack_rows(vectors, cols, field));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) basis.push_back(red.reduced.row(i));
  return basis;
}

bool in_span(const std::vector<Vector>& vectors, const Vector& v, Field field) {
  if (is_zero(v)) return true;
  if (vectors.empty()) return false;
  std::vector<Vector> extended = vectors;
  extended.push_back(v);
  return rank_of(extended, v.size(), field) == rank_of(vectors, v.size(), field);
}

}  // namespace bihom
