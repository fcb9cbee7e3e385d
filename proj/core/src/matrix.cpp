#include "bihom/matrix.hpp"

#include <sstream>

#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

Vector zero_vector(std::size_t n, Field field) {
  return Vector(n, FieldElement::zero(field));
}

Vector unit_vector(std::size_t n, std::size_t index, Field field) {
  Vector v = zero_vector(n, field);
  v.at(index) = FieldElement::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw dimension_error("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector scale(const FieldElement& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field),
      entries_(rows * cols, FieldElement::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw dimension_error("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  if (!entries_.empty()) field_ = entries_.front().field();
  for (const auto& e : entries_) {
    if (e.field() != field_) throw field_mismatch_error("matrix entries span several fields");
  }
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j, Field field) {
  Matrix m(n, n, field);
  m(i, j) = FieldElement::one(field);
  return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElement>& diag) {
  if (diag.empty()) return Matrix{};
  Matrix m(diag.size(), diag.size(), diag.front().field());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw dimension_error("ragged matrix literal");
    for (long v : row) entries.push_back(FieldElement::integer(v, field));
  }
  Matrix m(r, c, std::move(entries));
  m.field_ = field;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows, Field field) {
  Matrix m(rows, columns.size(), field);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw dimension_error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_zero() const { return bihom::is_zero(entries_); }

bool Matrix::is_identity() const {
  return is_square() && *this == identity(rows_, field_);
}

Matrix Matrix::from_vector(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw dimension_error("vector does not fit matrix shape");
  if (v.empty()) return Matrix(rows, cols, Field::rational());
  return Matrix(rows, cols, v);
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("matrix shapes differ");
  }
  if (a.field() != b.field()) throw field_mismatch_error("matrices over different fields");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw dimension_error("inner dimensions differ");
  if (a.field_ != b.field_) throw field_mismatch_error("matrices over different fields");
  Matrix r(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const FieldElement& c, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.entries_) e *= c;
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols_) throw dimension_error("vector length does not match columns");
  Vector r = zero_vector(m.rows_, m.field_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.field_ != b.field_) return false;
  return a.entries_ == b.entries_;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw dimension_error("power of a non-square matrix");
  Matrix result = identity(rows_, field_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::to_field(Field target) const {
  Matrix r(rows_, cols_, target);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].to_field(target);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < cols_; ++j) {
      out << (j == 0 ? "" : ", ") << (*this)(i, j).to_string();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix matmul(const Matrix& a, const Matrix& b) { return a * b; }

MatrixSubspace::MatrixSubspace(std::size_t dim_ambient, Field field, std::vector<Matrix> basis)
    : n_(dim_ambient), field_(field), basis_(std::move(basis)) {
  std::vector<Vector> flat;
  for (const auto& m : basis_) {
    if (m.rows() != n_ || m.cols() != n_) throw precondition_error("basis matrix mis-shaped");
    if (m.field() != field_) throw field_mismatch_error("basis matrix over another field");
    flat.push_back(m.vectorize());
  }
  if (rank_of(flat, n_ * n_, field_) != basis_.size()) {
    throw precondition_error("basis matrices are linearly dependent");
  }
}

MatrixSubspace MatrixSubspace::span(std::size_t dim_ambient, Field field,
                                    const std::vector<Matrix>& generators) {
  MatrixSubspace result(dim_ambient, field);
  std::vector<Vector> flat;
  for (const auto& g : generators) {
    if (g.rows() != dim_ambient || g.cols() != dim_ambient) {
      throw precondition_error("generator mis-shaped");
    }
    Vector v = g.vectorize();
    if (in_span(flat, v, field)) continue;
    flat.push_back(std::move(v));
    result.basis_.push_back(g);
  }
  return result;
}

MatrixSubspace MatrixSubspace::full(std::size_t dim_ambient, Field field) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < dim_ambient; ++i) {
    for (std::size_t j = 0; j < dim_ambient; ++j) {
      basis.push_back(Matrix::unit(dim_ambient, i, j, field));
    }
  }
  return MatrixSubspace(dim_ambient, field, std::move(basis));
}

bool MatrixSubspace::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  std::vector<Vector> flat;
  flat.reserve(basis_.size());
  for (const auto& b : basis_) flat.push_back(b.vectorize());
  return in_span(flat, m.vectorize(), field_);
}

bool MatrixSubspace::is_subspace_of(const MatrixSubspace& other) const {
  for (const auto& b : basis_) {
    if (!other.contains(b)) return false;
  }
  return true;
}

bool MatrixSubspace::same_span(const MatrixSubspace& other) const {
  return dim() == other.dim() && is_subspace_of(other);
}

}  // namespace bihom
