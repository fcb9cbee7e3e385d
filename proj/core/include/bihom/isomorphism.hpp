#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// f is bijective, f[x, y] = [f x, f y]' and f intertwines both twists.
bool verify_isomorphism(const BiHomLieAlgebra& L, const BiHomLieAlgebra& L2, const Matrix& f);

/// One der_dims key: (lambda, mu, gamma) at exponents (k, l).
struct DerSample {
  long lambda;
  long mu;
  long gamma;
  unsigned k;
  unsigned l;

  friend bool operator==(const DerSample&, const DerSample&) = default;
};

const std::vector<DerSample>& fingerprint_der_samples();

/// Basis-independent invariants; equality certifies nothing, a difference
/// certifies non-isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t rank_alpha = 0;
  std::size_t rank_beta = 0;
  std::size_t dim_bracket_image = 0;
  std::size_t dim_center = 0;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  /// Aligned with fingerprint_der_samples().
  std::vector<std::size_t> der_dims;
  std::vector<std::string> char_poly_alpha;
  std::vector<std::string> char_poly_beta;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  /// Names of differing components.
  std::vector<std::string> differences(const Fingerprint& other) const;
};

Fingerprint fingerprint(const BiHomLieAlgebra& L);

/// Exhaustive search of GL_n(F_p) in lexicographic order of the row-major
/// entries; returns the first witness. Rational input is reduced mod p.
/// Throws precondition_error for n > 3 and unsupported_field_error when p
/// divides a denominator.
std::optional<Matrix> brute_force_iso(const BiHomLieAlgebra& L, const BiHomLieAlgebra& L2,
                                      std::uint64_t p);

/// Smallest prime not dividing any denominator of the data.
std::uint64_t smallest_admissible_prime(const std::vector<const BiHomLieAlgebra*>& algebras);

enum class IsoVerdict {
  witness_verified,
  witness_rejected,
  not_isomorphic_fingerprint,
  no_witness_over_fp,
  witness_found_over_fp,
  inconclusive,
};
std::string to_string(IsoVerdict verdict);

}  // namespace bihom
