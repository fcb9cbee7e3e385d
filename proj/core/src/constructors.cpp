#include "bihom/algebra.hpp"
#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

namespace {

void require_square(const Matrix& m, std::size_t n, Field f, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw dimension_error(std::string(what) + " must be " + std::to_string(n) + " x " +
                          std::to_string(n));
  }
  if (m.field() != f) throw field_mismatch_error(std::string(what) + " over another field");
}

// Table of (x, y) -> lie(left * x, right * y) on basis vectors.
StructureTable twisted_table(const StructureTable& lie, const Matrix& left, const Matrix& right) {
  const std::size_t n = lie.dim();
  StructureTable out(n, lie.field());
  for (std::size_t i = 0; i < n; ++i) {
    const Vector li = left.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = lie.product(li, right.column(j));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  }
  return out;
}

}  // namespace

BiHomLieAlgebra yau_twist(const StructureTable& lie, const Matrix& alpha, const Matrix& beta) {
  require_square(alpha, lie.dim(), lie.field(), "alpha");
  require_square(beta, lie.dim(), lie.field(), "beta");
  if (!is_lie_algebra(lie)) throw precondition_error("input bracket is not a Lie algebra");
  if (alpha * beta != beta * alpha) throw precondition_error("twists do not commute");
  if (!is_lie_endomorphism(lie, alpha) || !is_lie_endomorphism(lie, beta)) {
    throw precondition_error("twists must be endomorphisms of the Lie bracket");
  }
  return BiHomLieAlgebra(twisted_table(lie, alpha, beta), alpha, beta);
}

StructureTable induced_lie(const BiHomLieAlgebra& L) {
  if (!is_regular(L)) throw precondition_error("induced Lie bracket needs bijective twists");
  return twisted_table(L.structure(), invert(L.alpha()), invert(L.beta()));
}

StructureTable heisenberg_lie(std::size_t m, Field field) {
  const std::size_t n = 2 * m + 1;
  StructureTable lie(n, field);
  for (std::size_t i = 0; i < m; ++i) {
    lie(i, m + i, 2 * m) = FieldElement::one(field);
    lie(m + i, i, 2 * m) = -FieldElement::one(field);
  }
  return lie;
}

BiHomLieAlgebra heisenberg(std::size_t m, const FieldElement& a, const FieldElement& x,
                           const std::vector<FieldElement>& b_list,
                           const std::vector<FieldElement>& y_list) {
  if (m == 0 || b_list.size() != m || y_list.size() != m) {
    throw precondition_error("heisenberg needs m >= 1 and m twist parameters per list");
  }
  if (a.is_zero() || x.is_zero()) throw precondition_error("heisenberg twist parameters must be nonzero");
  const Field f = a.field();
  std::vector<FieldElement> alpha_diag(2 * m + 1), beta_diag(2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b_list[i].is_zero() || y_list[i].is_zero()) {
      throw precondition_error("heisenberg twist parameters must be nonzero");
    }
    alpha_diag[i] = b_list[i];
    alpha_diag[m + i] = a / b_list[i];
    beta_diag[i] = y_list[i];
    beta_diag[m + i] = x / y_list[i];
  }
  alpha_diag[2 * m] = a;
  beta_diag[2 * m] = x;
  return yau_twist(heisenberg_lie(m, f), Matrix::diagonal(alpha_diag),
                   Matrix::diagonal(beta_diag));
}

BiHomLieAlgebra derivation_extension(const StructureTable& lie, const Matrix& D,
                                     const FieldElement& a, const FieldElement& b) {
  const std::size_t n = lie.dim();
  const Field f = lie.field();
  require_square(D, n, f, "D");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = unit_vector(n, i, f);
      const Vector y = unit_vector(n, j, f);
      const Vector lhs = scale(b, D * lie.product(x, y));
      const Vector rhs = scale(a, add(lie.product(D * x, y), lie.product(x, D * y)));
      if (lhs != rhs) {
        throw precondition_error("D is not a (b,a,a)-derivation of the Lie bracket");
      }
    }
  }
  StructureTable out(n + 1, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = lie(i, j, k);
    }
    for (std::size_t k = 0; k < n; ++k) {
      out(i, n, k) = -(b * D(k, i));
      out(n, i, k) = a * D(k, i);
    }
  }
  Matrix alpha = Matrix::identity(n + 1, f);
  Matrix beta = Matrix::identity(n + 1, f);
  alpha(n, n) = a;
  beta(n, n) = b;
  return BiHomLieAlgebra(std::move(out), std::move(alpha), std::move(beta));
}

BiHomLieAlgebra direct_sum(const BiHomLieAlgebra& A, const BiHomLieAlgebra& B) {
  if (A.field() != B.field()) throw field_mismatch_error("direct sum over different fields");
  const std::size_t n = A.dim();
  const std::size_t m = B.dim();
  const Field f = A.field();
  StructureTable table(n + m, f);
  for (const auto& t : A.structure().terms()) table(t.i, t.j, t.k) = t.value;
  for (const auto& t : B.structure().terms()) table(n + t.i, n + t.j, n + t.k) = t.value;
  Matrix alpha(n + m, n + m, f);
  Matrix beta(n + m, n + m, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      alpha(i, j) = A.alpha()(i, j);
      beta(i, j) = A.beta()(i, j);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      alpha(n + i, n + j) = B.alpha()(i, j);
      beta(n + i, n + j) = B.beta()(i, j);
    }
  }
  return BiHomLieAlgebra(std::move(table), std::move(alpha), std::move(beta));
}

BiHomLieAlgebra transport(const BiHomLieAlgebra& L, const Matrix& f) {
  require_square(f, L.dim(), L.field(), "f");
  const Matrix finv = invert(f);
  const std::size_t n = L.dim();
  StructureTable out(n, L.field());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Vector v = f * bracket(L, finv.column(p), finv.column(q));
      for (std::size_t s = 0; s < n; ++s) out(p, q, s) = v[s];
    }
  }
  return BiHomLieAlgebra(std::move(out), f * L.alpha() * finv, f * L.beta() * finv);
}

}  // namespace bihom
