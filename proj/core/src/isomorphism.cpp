#include "bihom/isomorphism.hpp"

#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"
#include "bihom/structure.hpp"

namespace bihom {

bool verify_isomorphism(const BiHomLieAlgebra& L, const BiHomLieAlgebra& L2, const Matrix& f) {
  const std::size_t n = L.dim();
  if (L2.dim() != n || f.rows() != n || f.cols() != n) return false;
  if (L.field() != L2.field() || f.field() != L.field()) {
    throw field_mismatch_error("isomorphism data over different fields");
  }
  if (f * L.alpha() != L2.alpha() * f || f * L.beta() != L2.beta() * f) return false;
  // sum_k C_ij^k f_sk = sum_{p,q} f_pi f_qj C'_pq^s
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < n; ++s) {
        FieldElement lhs = FieldElement::zero(L.field());
        for (std::size_t k = 0; k < n; ++k) lhs += L.constant(i, j, k) * f(s, k);
        FieldElement rhs = FieldElement::zero(L.field());
        for (std::size_t p = 0; p < n; ++p) {
          if (f(p, i).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q) rhs += f(p, i) * f(q, j) * L2.constant(p, q, s);
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return is_invertible(f);
}

const std::vector<DerSample>& fingerprint_der_samples() {
  static const std::vector<DerSample> samples = [] {
    const DerSample triples[] = {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0},
                                 {1, 1, 0, 0, 0}, {2, 1, 0, 0, 0}, {0, 1, 1, 0, 0},
                                 {1, 1, 1, 0, 0}, {2, 1, 1, 0, 0}, {1, 1, -1, 0, 0},
                                 {0, 1, -1, 0, 0}};
    std::vector<DerSample> out;
    for (unsigned k = 0; k <= 1; ++k) {
      for (unsigned l = 0; l <= 1; ++l) {
        for (DerSample t : triples) {
          t.k = k;
          t.l = l;
          out.push_back(t);
        }
      }
    }
    return out;
  }();
  return samples;
}

std::vector<std::string> Fingerprint::differences(const Fingerprint& o) const {
  std::vector<std::string> out;
  if (dim != o.dim) out.emplace_back("dim");
  if (rank_alpha != o.rank_alpha) out.emplace_back("rank_alpha");
  if (rank_beta != o.rank_beta) out.emplace_back("rank_beta");
  if (dim_bracket_image != o.dim_bracket_image) out.emplace_back("dim_bracket_image");
  if (dim_center != o.dim_center) out.emplace_back("dim_center");
  if (lower_central_dims != o.lower_central_dims) out.emplace_back("lower_central_dims");
  if (derived_dims != o.derived_dims) out.emplace_back("derived_dims");
  if (der_dims != o.der_dims) out.emplace_back("der_dims");
  if (char_poly_alpha != o.char_poly_alpha) out.emplace_back("char_poly_alpha");
  if (char_poly_beta != o.char_poly_beta) out.emplace_back("char_poly_beta");
  return out;
}

namespace {

std::vector<std::string> poly_strings(const Matrix& m) {
  std::vector<std::string> out;
  for (const auto& c : characteristic_polynomial(m)) out.push_back(c.to_string());
  return out;
}

}  // namespace

Fingerprint fingerprint(const BiHomLieAlgebra& L) {
  Fingerprint fp;
  fp.dim = L.dim();
  fp.rank_alpha = rank(L.alpha());
  fp.rank_beta = rank(L.beta());
  const Subspace whole = Subspace::whole(L.dim(), L.field());
  fp.dim_bracket_image = product_subspace(L, whole, whole).dim();
  fp.dim_center = center(L).dim();
  fp.lower_central_dims = lower_central_series(L).dims;
  fp.derived_dims = derived_series(L).dims;
  for (const auto& s : fingerprint_der_samples()) {
    fp.der_dims.push_back(
        gen_der_space(L, GenDerivationParams::make(s.lambda, s.mu, s.gamma, s.k, s.l, L.field()))
            .space.dim());
  }
  fp.char_poly_alpha = poly_strings(L.alpha());
  fp.char_poly_beta = poly_strings(L.beta());
  return fp;
}

std::optional<Matrix> brute_force_iso(const BiHomLieAlgebra& L, const BiHomLieAlgebra& L2,
                                      std::uint64_t p) {
  const Field fp = Field::prime(p);
  const std::size_t n = L.dim();
  if (n > 3) throw precondition_error("exhaustive search is limited to n <= 3");
  if (L2.dim() != n) return std::nullopt;
  const BiHomLieAlgebra A = L.to_field(fp);
  const BiHomLieAlgebra B = L2.to_field(fp);
  const std::size_t cells = n * n;
  std::vector<std::uint64_t> digits(cells, 0);
  std::vector<FieldElement> values;
  for (std::uint64_t r = 0; r < p; ++r) values.push_back(FieldElement::integer(static_cast<long>(r), fp));
  for (;;) {
    std::vector<FieldElement> entries;
    entries.reserve(cells);
    for (auto d : digits) entries.push_back(values[d]);
    Matrix f(n, n, std::move(entries));
    if (verify_isomorphism(A, B, f)) return f;
    // Increment the last cell first so matrices come out in lexicographic order.
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (cells == 0) return std::nullopt;
  }
}

std::uint64_t smallest_admissible_prime(const std::vector<const BiHomLieAlgebra*>& algebras) {
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto* L : algebras) {
      if (!L->field().is_rational()) continue;
      try {
        (void)L->to_field(Field::prime(p));
      } catch (const unsupported_field_error&) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
}

std::string to_string(IsoVerdict verdict) {
  switch (verdict) {
    case IsoVerdict::witness_verified:
      return "isomorphic (witness verified)";
    case IsoVerdict::witness_rejected:
      return "witness rejected";
    case IsoVerdict::not_isomorphic_fingerprint:
      return "not isomorphic (fingerprints differ)";
    case IsoVerdict::no_witness_over_fp:
      return "no witness over F_p";
    case IsoVerdict::witness_found_over_fp:
      return "witness found over F_p";
    case IsoVerdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

}  // namespace bihom
