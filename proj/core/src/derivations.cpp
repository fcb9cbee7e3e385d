#include "bihom/derivations.hpp"

#include <sstream>

#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

GenDerivationParams GenDerivationParams::make(long lambda, long mu, long gamma, unsigned k,
                                              unsigned l, Field field) {
  return {FieldElement::integer(lambda, field), FieldElement::integer(mu, field),
          FieldElement::integer(gamma, field), k, l};
}

GenDerivationParams GenDerivationParams::to_field(Field target) const {
  return {lambda.to_field(target), mu.to_field(target), gamma.to_field(target), k, l};
}

std::string GenDerivationParams::to_string() const {
  std::ostringstream out;
  out << '(' << lambda.to_string() << ',' << mu.to_string() << ',' << gamma.to_string()
      << ") k=" << k << " l=" << l;
  return out.str();
}

namespace {

std::vector<Matrix> matrices_from_nullspace(const Matrix& system, std::size_t n) {
  std::vector<Matrix> basis;
  for (const auto& v : nullspace_basis(system)) basis.push_back(Matrix::from_vector(n, n, v));
  return basis;
}

void append_commutation_rows(std::vector<Vector>& rows, const Matrix& t, std::size_t n) {
  const Field f = t.field();
  // (d t - t d)_{ij} = sum_s d_{is} t_{sj} - sum_s t_{is} d_{sj}
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector row = zero_vector(n * n, f);
      for (std::size_t s = 0; s < n; ++s) {
        row[i * n + s] += t(s, j);
        row[s * n + j] -= t(i, s);
      }
      rows.push_back(std::move(row));
    }
  }
}

}  // namespace

MatrixSubspace omega_basis(const BiHomLieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  append_commutation_rows(rows, L.alpha(), n);
  append_commutation_rows(rows, L.beta(), n);
  const Matrix system = stack_rows(rows, n * n, L.field());
  return MatrixSubspace(n, L.field(), matrices_from_nullspace(system, n));
}

Matrix derivation_system(const BiHomLieAlgebra& L, const GenDerivationParams& raw) {
  const std::size_t n = L.dim();
  const Field f = L.field();
  const GenDerivationParams p = raw.to_field(f);
  const Matrix m = twist_power(L, p.k, p.l);
  std::vector<Vector> rows;
  rows.reserve(2 * n * n + n * n * n);
  append_commutation_rows(rows, L.alpha(), n);
  append_commutation_rows(rows, L.beta(), n);
  const auto u = [n](std::size_t a, std::size_t b) { return a * n + b; };
  // lambda sum_k C_ij^k d_sk - mu sum_{k,l} d_ki m_lj C_kl^s - gamma sum_{k,l} d_lj m_ki C_kl^s
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < n; ++s) {
        Vector row = zero_vector(n * n, f);
        for (std::size_t k = 0; k < n; ++k) {
          if (!L.constant(i, j, k).is_zero()) row[u(s, k)] += p.lambda * L.constant(i, j, k);
        }
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            const FieldElement& c = L.constant(k, l, s);
            if (c.is_zero()) continue;
            row[u(k, i)] -= p.mu * m(l, j) * c;
            row[u(l, j)] -= p.gamma * m(k, i) * c;
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return stack_rows(rows, n * n, f);
}

DerivationSpace gen_der_space(const BiHomLieAlgebra& L, const GenDerivationParams& params) {
  const Matrix system = derivation_system(L, params);
  return {params.to_field(L.field()),
          MatrixSubspace(L.dim(), L.field(), matrices_from_nullspace(system, L.dim())),
          content_hash(L)};
}

bool verify_membership(const BiHomLieAlgebra& L, const Matrix& d,
                       const GenDerivationParams& raw) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) throw dimension_error("operator must be n x n");
  if (d * L.alpha() != L.alpha() * d || d * L.beta() != L.beta() * d) return false;
  const GenDerivationParams p = raw.to_field(L.field());
  const Matrix m = twist_power(L, p.k, p.l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = basis_vector(L, i);
      const Vector y = basis_vector(L, j);
      const Vector lhs = scale(p.lambda, d * bracket(L, x, y));
      const Vector rhs = add(scale(p.mu, bracket(L, d * x, m * y)),
                             scale(p.gamma, bracket(L, m * x, d * y)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

DerivationSpace centroid(const BiHomLieAlgebra& L, unsigned k, unsigned l) {
  return gen_der_space(L, GenDerivationParams::make(1, 1, 0, k, l, L.field()));
}

DerivationSpace quasi_centroid(const BiHomLieAlgebra& L, unsigned k, unsigned l) {
  return gen_der_space(L, GenDerivationParams::make(0, 1, -1, k, l, L.field()));
}

DerivationSpace derivations(const BiHomLieAlgebra& L, unsigned k, unsigned l) {
  return gen_der_space(L, GenDerivationParams::make(1, 1, 1, k, l, L.field()));
}

MatrixSubspace central_derivations(const BiHomLieAlgebra& L, unsigned k, unsigned l,
                                   CentralSides sides) {
  const Field f = L.field();
  MatrixSubspace result = subspace_intersection(
      gen_der_space(L, GenDerivationParams::make(1, 0, 0, k, l, f)).space,
      gen_der_space(L, GenDerivationParams::make(0, 1, 0, k, l, f)).space);
  if (sides == CentralSides::two_sided) {
    result = subspace_intersection(
        result, gen_der_space(L, GenDerivationParams::make(0, 0, 1, k, l, f)).space);
  }
  return result;
}

NormalizedParams normalize_params(const FieldElement& lambda, const FieldElement& mu,
                                  const FieldElement& gamma) {
  const Field f = lambda.field();
  const FieldElement zero = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);
  const bool mu_eq_gamma = mu == gamma;
  const bool mu_eq_neg_gamma = mu == -gamma;
  if (!lambda.is_zero()) {
    if (!mu_eq_gamma && !mu_eq_neg_gamma) {
      return {lambda / (mu + gamma), one, zero, ParamCase::scaled_left};
    }
    if (mu.is_zero()) return {one, zero, zero, ParamCase::annihilating};
    if (mu_eq_gamma) return {lambda / mu, one, one, ParamCase::symmetric};
    return {one, one, -one, ParamCase::antisymmetric};
  }
  if (!mu_eq_gamma && !mu_eq_neg_gamma) return {zero, one, zero, ParamCase::left_central};
  if (mu.is_zero()) return {zero, zero, zero, ParamCase::all_zero};
  if (mu_eq_gamma) return {zero, one, one, ParamCase::symmetric_zero};
  return {zero, one, -one, ParamCase::quasi_centroid};
}

GenDerivationParams normalized(const GenDerivationParams& params) {
  const NormalizedParams np = normalize_params(params.lambda, params.mu, params.gamma);
  return {np.lambda, np.mu, np.gamma, params.k, params.l};
}

Matrix commutator(const Matrix& D, const Matrix& D2) { return D * D2 - D2 * D; }

Matrix jordan_product(const Matrix& f, const Matrix& g) {
  if (f.field().characteristic() == 2) {
    throw unsupported_field_error("Jordan product needs characteristic != 2");
  }
  const FieldElement half = FieldElement::ratio(1, 2, f.field());
  return half * (f * g + g * f);
}

MatrixSubspace subspace_intersection(const MatrixSubspace& A, const MatrixSubspace& B) {
  if (A.dim_ambient() != B.dim_ambient() || A.field() != B.field()) {
    throw dimension_error("subspaces live in different ambient spaces");
  }
  const std::size_t n = A.dim_ambient();
  const std::size_t N = n * n;
  const Field f = A.field();
  if (A.dim() == 0 || B.dim() == 0) return MatrixSubspace(n, f);
  // Columns: A-basis then B-basis; a kernel vector (x, y) gives sum x_i A_i = -sum y_j B_j.
  std::vector<Vector> columns;
  for (const auto& m : A.basis()) columns.push_back(m.vectorize());
  for (const auto& m : B.basis()) columns.push_back(m.vectorize());
  const Matrix system = Matrix::from_columns(columns, N, f);
  std::vector<Matrix> generators;
  for (const auto& v : nullspace_basis(system)) {
    Matrix acc(n, n, f);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (!v[i].is_zero()) acc = acc + v[i] * A.basis()[i];
    }
    generators.push_back(std::move(acc));
  }
  return MatrixSubspace::span(n, f, generators);
}

MatrixSubspace subspace_sum(const MatrixSubspace& A, const MatrixSubspace& B) {
  std::vector<Matrix> generators = A.basis();
  generators.insert(generators.end(), B.basis().begin(), B.basis().end());
  return MatrixSubspace::span(A.dim_ambient(), A.field(), generators);
}

ExponentGrid der_space_union_over_exponents(const BiHomLieAlgebra& L,
                                            const GenDerivationParams& params, unsigned k_max,
                                            unsigned l_max) {
  ExponentGrid grid{{}, MatrixSubspace(L.dim(), L.field())};
  std::vector<Matrix> generators;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned l = 0; l <= l_max; ++l) {
      GenDerivationParams p = params;
      p.k = k;
      p.l = l;
      DerivationSpace point = gen_der_space(L, p);
      generators.insert(generators.end(), point.space.basis().begin(),
                        point.space.basis().end());
      grid.points.push_back(std::move(point));
    }
  }
  grid.span = MatrixSubspace::span(L.dim(), L.field(), generators);
  return grid;
}

}  // namespace bihom
