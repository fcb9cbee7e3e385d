#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/field.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// One nonzero structure constant: [e_i, e_j] has coefficient `value` on e_k.
/// Indices are zero-based.
struct BracketTerm {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  FieldElement value;
};

/// Dense table C_{ij}^k of a bilinear product on an n-dimensional space.
class StructureTable {
 public:
  StructureTable(std::size_t n, Field field);
  StructureTable(std::size_t n, Field field, const std::vector<BracketTerm>& terms);

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }
  const FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  FieldElement& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }
  /// Nonzero entries in (i, j, k) lexicographic order.
  std::vector<BracketTerm> terms() const;
  bool is_zero() const;

  Vector product(const Vector& x, const Vector& y) const;
  StructureTable to_field(Field target) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  std::size_t n_;
  Field field_;
  std::vector<FieldElement> c_;
};

/// Structure constants plus the two twist maps. Axioms are not enforced at
/// construction; use the check_* functions.
class BiHomLieAlgebra {
 public:
  /// Throws on shape or field disagreement between the table and twists.
  BiHomLieAlgebra(StructureTable structure, Matrix alpha, Matrix beta);

  std::size_t dim() const { return structure_.dim(); }
  Field field() const { return structure_.field(); }
  const StructureTable& structure() const { return structure_; }
  const FieldElement& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_(i, j, k);
  }
  const Matrix& alpha() const { return alpha_; }
  const Matrix& beta() const { return beta_; }

  BiHomLieAlgebra to_field(Field target) const;

  friend bool operator==(const BiHomLieAlgebra& a, const BiHomLieAlgebra& b) {
    return a.structure_ == b.structure_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  StructureTable structure_;
  Matrix alpha_;
  Matrix beta_;
};

Vector bracket(const BiHomLieAlgebra& L, const Vector& x, const Vector& y);
Vector basis_vector(const BiHomLieAlgebra& L, std::size_t i);
/// FNV-1a over a canonical text rendering of the algebra.
std::uint64_t content_hash(const BiHomLieAlgebra& L);
bool is_regular(const BiHomLieAlgebra& L);
/// alpha^k beta^l.
Matrix twist_power(const BiHomLieAlgebra& L, unsigned k, unsigned l);

/// First failing index tuple (one-based) of an axiom, with its residual.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  FieldElement residual;

  std::string describe() const;
};

struct AxiomCheck {
  bool passed = true;
  std::optional<Violation> violation;
};

struct AxiomReport {
  bool commuting = true;
  bool skew_symmetric = true;
  bool bihom_jacobi = true;
  bool multiplicative = true;
  std::optional<Violation> first_violation;

  bool ok() const { return commuting && skew_symmetric && bihom_jacobi && multiplicative; }
};

// Structure-constant forms.
bool check_commuting(const BiHomLieAlgebra& L);
AxiomCheck check_commuting_detail(const BiHomLieAlgebra& L);
AxiomCheck check_skew_symmetry(const BiHomLieAlgebra& L);
AxiomCheck check_bihom_jacobi(const BiHomLieAlgebra& L);
AxiomCheck check_multiplicative(const BiHomLieAlgebra& L);
AxiomReport check_all(const BiHomLieAlgebra& L);

// The same axioms evaluated through `bracket` on basis tuples.
namespace on_basis {
bool skew_symmetry(const BiHomLieAlgebra& L);
bool bihom_jacobi(const BiHomLieAlgebra& L);
bool multiplicative(const BiHomLieAlgebra& L);
}  // namespace on_basis

/// Classical skew-symmetry and Jacobi of an untwisted product.
bool is_lie_algebra(const StructureTable& lie);
bool is_lie_endomorphism(const StructureTable& lie, const Matrix& m);

/// [a, b] = [alpha a, beta b]'. Throws precondition_error unless the twists
/// commute and are endomorphisms of `lie`.
BiHomLieAlgebra yau_twist(const StructureTable& lie, const Matrix& alpha, const Matrix& beta);
/// [x, y]' = [alpha^-1 x, beta^-1 y]; throws precondition_error if L is not
/// regular.
StructureTable induced_lie(const BiHomLieAlgebra& L);
/// Heisenberg algebra with basis X_1..X_m, Y_1..Y_m, Z twisted by
/// alpha = diag(b_i, a/b_i, a), beta = diag(y_i, x/y_i, x).
BiHomLieAlgebra heisenberg(std::size_t m, const FieldElement& a, const FieldElement& x,
                           const std::vector<FieldElement>& b_list,
                           const std::vector<FieldElement>& y_list);
/// Classical Heisenberg bracket [X_i, Y_i] = Z on 2m+1 dimensions.
StructureTable heisenberg_lie(std::size_t m, Field field);
/// One-dimensional extension of `lie` by an outer operator D, basis e_1..e_n, D.
/// [x + pD, y + qD] = [x, y]' - q b D(x) + p a D(y), alpha = id + a on D,
/// beta = id + b on D. Throws precondition_error unless
/// b D[x,y]' = a [Dx, y]' + a [x, Dy]'.
BiHomLieAlgebra derivation_extension(const StructureTable& lie, const Matrix& D,
                                     const FieldElement& a, const FieldElement& b);
BiHomLieAlgebra direct_sum(const BiHomLieAlgebra& A, const BiHomLieAlgebra& B);
/// Structure transported along an invertible f: [f u, f v]' = f [u, v].
BiHomLieAlgebra transport(const BiHomLieAlgebra& L, const Matrix& f);

}  // namespace bihom
