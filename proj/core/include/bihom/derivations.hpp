#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// (lambda, mu, gamma) with exponents: alpha^k beta^l is the twist that
/// accompanies the unknown operator.
struct GenDerivationParams {
  FieldElement lambda;
  FieldElement mu;
  FieldElement gamma;
  unsigned k = 0;
  unsigned l = 0;

  static GenDerivationParams make(long lambda, long mu, long gamma, unsigned k = 0,
                                  unsigned l = 0, Field field = Field::rational());
  GenDerivationParams to_field(Field target) const;
  std::string to_string() const;
};

struct DerivationSpace {
  GenDerivationParams params;
  MatrixSubspace space;
  std::uint64_t algebra_fingerprint = 0;
};

/// Joint commutant of alpha and beta.
MatrixSubspace omega_basis(const BiHomLieAlgebra& L);

/// Coefficient matrix of the linear system in the n^2 unknowns d_{ij}
/// (row-major vectorization of d): 2 n^2 commutation rows, then one row per
/// (i, j, s) for the defining identity.
Matrix derivation_system(const BiHomLieAlgebra& L, const GenDerivationParams& params);
DerivationSpace gen_der_space(const BiHomLieAlgebra& L, const GenDerivationParams& params);
/// Direct evaluation of the defining identity on basis pairs.
bool verify_membership(const BiHomLieAlgebra& L, const Matrix& d,
                       const GenDerivationParams& params);

DerivationSpace centroid(const BiHomLieAlgebra& L, unsigned k, unsigned l);
DerivationSpace quasi_centroid(const BiHomLieAlgebra& L, unsigned k, unsigned l);
DerivationSpace derivations(const BiHomLieAlgebra& L, unsigned k, unsigned l);

enum class CentralSides {
  /// Der^{(1,0,0)} intersected with Der^{(0,1,0)}.
  one_sided,
  /// Additionally intersected with Der^{(0,0,1)}.
  two_sided,
};
MatrixSubspace central_derivations(const BiHomLieAlgebra& L, unsigned k, unsigned l,
                                   CentralSides sides = CentralSides::one_sided);

enum class ParamCase {
  all_zero = 0,
  scaled_left = 1,       // (lambda/(mu+gamma), 1, 0)
  antisymmetric = 2,     // (1, 1, -1)
  symmetric = 3,         // (lambda/mu, 1, 1)
  annihilating = 4,      // (1, 0, 0)
  left_central = 5,      // (0, 1, 0)
  symmetric_zero = 6,    // (0, 1, 1)
  quasi_centroid = 7,    // (0, 1, -1)
};

struct NormalizedParams {
  FieldElement lambda;
  FieldElement mu;
  FieldElement gamma;
  ParamCase param_case;
};

NormalizedParams normalize_params(const FieldElement& lambda, const FieldElement& mu,
                                  const FieldElement& gamma);
GenDerivationParams normalized(const GenDerivationParams& params);

Matrix commutator(const Matrix& D, const Matrix& D2);
/// (f g + g f) / 2; throws unsupported_field_error in characteristic 2.
Matrix jordan_product(const Matrix& f, const Matrix& g);
MatrixSubspace subspace_intersection(const MatrixSubspace& A, const MatrixSubspace& B);
MatrixSubspace subspace_sum(const MatrixSubspace& A, const MatrixSubspace& B);

struct ExponentGrid {
  std::vector<DerivationSpace> points;  // ordered by (k, l)
  MatrixSubspace span;
};
ExponentGrid der_space_union_over_exponents(const BiHomLieAlgebra& L,
                                            const GenDerivationParams& params, unsigned k_max,
                                            unsigned l_max);

}  // namespace bihom
