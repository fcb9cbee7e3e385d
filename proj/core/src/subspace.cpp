#include <sstream>

#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"
#include "bihom/structure.hpp"

namespace bihom {

Subspace Subspace::span(std::size_t ambient_dim, Field field, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim, field);
  s.basis_ = row_space_basis(vectors, ambient_dim, field);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim, Field field) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i, field));
  return span(ambient_dim, field, units);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw dimension_error("vector length != ambient dimension");
  return in_span(basis_, v, field_);
}

Vector Subspace::coordinates(const Vector& v) const {
  // The RREF basis has a leading one per vector, so coordinates are read off
  // the pivot positions.
  Vector c;
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    c.push_back(v[pivot]);
  }
  return c;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& b : basis_) {
    if (!other.contains(b)) return false;
  }
  return true;
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vector> images;
  for (const auto& b : basis_) images.push_back(m * b);
  return span(m.rows(), field_, images);
}

Subspace Subspace::operator+(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(n_, field_, all);
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out << (i == 0 ? "(" : ", (");
    for (std::size_t j = 0; j < basis_[i].size(); ++j) {
      out << (j == 0 ? "" : ",") << basis_[i][j].to_string();
    }
    out << ')';
  }
  out << '}';
  return out.str();
}

Subspace kernel(const Matrix& m) {
  return Subspace::span(m.cols(), m.field(), nullspace_basis(m));
}

namespace {

// Row vectors w with w . v = 0 for every v in s.
std::vector<Vector> annihilator(const Subspace& s) {
  if (s.is_zero()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
      all.push_back(unit_vector(s.ambient_dim(), i, s.field()));
    }
    return all;
  }
  return nullspace_basis(stack_rows(s.basis(), s.ambient_dim(), s.field()));
}

}  // namespace

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("ambient dimensions differ");
  std::vector<Vector> eqs = annihilator(a);
  const std::vector<Vector> more = annihilator(b);
  eqs.insert(eqs.end(), more.begin(), more.end());
  if (eqs.empty()) return Subspace::whole(a.ambient_dim(), a.field());
  return kernel(stack_rows(eqs, a.ambient_dim(), a.field()));
}

}  // namespace bihom
