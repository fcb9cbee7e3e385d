#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/derivations.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// Subspace of K^n held as an RREF-canonical basis, so equal subspaces have
/// equal bases.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, Field field) : n_(ambient_dim), field_(field) {}
  static Subspace span(std::size_t ambient_dim, Field field, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim, Field field);

  std::size_t ambient_dim() const { return n_; }
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  // Safe in range-for over a temporary.
  std::vector<Vector> basis() && { return std::move(basis_); }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const Vector& v) const;
  /// Coordinates of v (assumed inside) with respect to basis().
  Vector coordinates(const Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;
  Subspace image(const Matrix& m) const;
  Subspace operator+(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.basis_ == b.basis_;
  }
  std::string to_string() const;

 private:
  std::size_t n_;
  Field field_;
  std::vector<Vector> basis_;
};

Subspace kernel(const Matrix& m);
Subspace intersection(const Subspace& a, const Subspace& b);

enum class SeriesKind { lower_central, derived };

struct SeriesReport {
  SeriesKind kind;
  /// dims[0] = dim L, then each term until it stops changing.
  std::vector<std::size_t> dims;
  bool terminated_at_zero = false;
  /// Index of the first zero term when terminated.
  std::size_t steps = 0;
};

enum class CenterSides {
  /// {x : [x, y] = 0 for all y}.
  one_sided,
  /// Also [y, x] = 0 for all y.
  two_sided,
};

Subspace product_subspace(const BiHomLieAlgebra& L, const Subspace& S, const Subspace& T);
Subspace center(const BiHomLieAlgebra& L, CenterSides sides = CenterSides::one_sided);
/// {x : [x, s] = 0 for all s in S}.
Subspace centralizer(const BiHomLieAlgebra& L, const Subspace& S);
SeriesReport lower_central_series(const BiHomLieAlgebra& L);
SeriesReport derived_series(const BiHomLieAlgebra& L);
/// Same series for an untwisted structure table.
SeriesReport lower_central_series(const StructureTable& table);
SeriesReport derived_series(const StructureTable& table);
/// Twist-invariant and a two-sided bracket ideal.
bool is_ideal(const BiHomLieAlgebra& L, const Subspace& S);
Subspace ker_alpha_plus_ker_beta(const BiHomLieAlgebra& L);

/// Lower central series of a space of operators under the commutator.
/// Throws precondition_error if the space is not closed under it.
SeriesReport operator_lower_central_series(const MatrixSubspace& space);
/// Whether Der_{alpha^0 beta^0}(L) is nilpotent under the commutator.
bool is_characteristically_nilpotent(const BiHomLieAlgebra& L);
/// The algebra induced on an ideal, in the coordinates of S.basis().
BiHomLieAlgebra restrict_to_ideal(const BiHomLieAlgebra& L, const Subspace& S);
/// Centroid at (0,0) is spanned by central derivations and the identity.
/// A two-dimensional algebra that splits into one-dimensional ideals is
/// judged through its factors.
bool is_small_centroid(const BiHomLieAlgebra& L, CentralSides sides = CentralSides::two_sided);

struct Decomposition {
  /// A pair of one-dimensional ideals spanning L, if any.
  std::optional<std::pair<Subspace, Subspace>> ideals;
  /// Whether L = [L, L] (+) C(L) as a direct sum of vector spaces.
  bool product_plus_center = false;
  /// True when both criteria give the same verdict.
  bool criteria_agree = false;
};

/// Two-dimensional decomposability into one-dimensional ideals. Throws
/// dimension_error for n != 2 and unsupported_field_error when a needed
/// eigenvalue is not rational.
Decomposition decompose_2dim(const BiHomLieAlgebra& L);

}  // namespace bihom
