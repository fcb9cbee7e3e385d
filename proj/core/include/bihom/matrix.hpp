#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bihom/field.hpp"

namespace bihom {

/// Coordinate vector; length is checked at use sites.
using Vector = std::vector<FieldElement>;

Vector zero_vector(std::size_t n, Field field);
Vector unit_vector(std::size_t n, std::size_t index, Field field);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const FieldElement& c, const Vector& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  /// Throws dimension_error if entries.size() != rows * cols, and
  /// field_mismatch_error if entries disagree on the field.
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix identity(std::size_t n, Field field);
  /// E_{ij}: one in position (i, j), zero elsewhere.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, Field field);
  static Matrix diagonal(const std::vector<FieldElement>& diag);
  /// Integer literal rows, convenient for tests and fixed data.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          Field field = Field::rational());
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  FieldElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  /// Row-major flattening; the inverse of from_vector.
  Vector vectorize() const { return entries_; }
  static Matrix from_vector(std::size_t rows, std::size_t cols, const Vector& v);

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& c, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(unsigned exponent) const;
  /// Entry-wise image in another field (see FieldElement::to_field).
  Matrix to_field(Field target) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<FieldElement> entries_;
};

Matrix matmul(const Matrix& a, const Matrix& b);

/// A linear space of square operators, stored as an independent basis.
class MatrixSubspace {
 public:
  MatrixSubspace(std::size_t dim_ambient, Field field) : n_(dim_ambient), field_(field) {}
  /// Throws precondition_error if the basis is dependent or mis-shaped.
  MatrixSubspace(std::size_t dim_ambient, Field field, std::vector<Matrix> basis);
  /// Extracts an independent basis from an arbitrary spanning list.
  static MatrixSubspace span(std::size_t dim_ambient, Field field,
                             const std::vector<Matrix>& generators);
  static MatrixSubspace full(std::size_t dim_ambient, Field field);

  std::size_t dim_ambient() const { return n_; }
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const& { return basis_; }
  // Safe in range-for over a temporary.
  std::vector<Matrix> basis() && { return std::move(basis_); }

  bool contains(const Matrix& m) const;
  bool is_subspace_of(const MatrixSubspace& other) const;
  bool same_span(const MatrixSubspace& other) const;

 private:
  std::size_t n_;
  Field field_;
  std::vector<Matrix> basis_;
};

}  // namespace bihom
