#include "bihom/structure.hpp"

#include "bihom/errors.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

Subspace product_subspace(const BiHomLieAlgebra& L, const Subspace& S, const Subspace& T) {
  std::vector<Vector> products;
  for (const auto& s : S.basis()) {
    for (const auto& t : T.basis()) products.push_back(bracket(L, s, t));
  }
  return Subspace::span(L.dim(), L.field(), products);
}

namespace {

// Rows expressing [x, v] = 0 (left_slot) or [v, x] = 0 as linear equations in x.
void append_annihilation_rows(const BiHomLieAlgebra& L, const Vector& v, bool x_on_left,
                              std::vector<Vector>& rows) {
  const std::size_t n = L.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = basis_vector(L, i);
    images.push_back(x_on_left ? bracket(L, ei, v) : bracket(L, v, ei));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector row = zero_vector(n, L.field());
    for (std::size_t i = 0; i < n; ++i) row[i] = images[i][k];
    rows.push_back(std::move(row));
  }
}

Subspace solve_rows(const BiHomLieAlgebra& L, const std::vector<Vector>& rows) {
  if (rows.empty()) return Subspace::whole(L.dim(), L.field());
  return kernel(stack_rows(rows, L.dim(), L.field()));
}

template <typename Product>
SeriesReport run_series(SeriesKind kind, std::size_t n, Field field, Product product) {
  SeriesReport report{kind, {}, false, 0};
  Subspace current = Subspace::whole(n, field);
  report.dims.push_back(current.dim());
  while (!current.is_zero()) {
    Subspace next = product(current);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
    report.dims.push_back(current.dim());
  }
  report.terminated_at_zero = report.dims.back() == 0;
  report.steps = report.terminated_at_zero ? report.dims.size() - 1 : 0;
  return report;
}

Subspace table_product(const StructureTable& t, const Subspace& S, const Subspace& T) {
  std::vector<Vector> products;
  for (const auto& s : S.basis()) {
    for (const auto& u : T.basis()) products.push_back(t.product(s, u));
  }
  return Subspace::span(t.dim(), t.field(), products);
}

}  // namespace

Subspace center(const BiHomLieAlgebra& L, CenterSides sides) {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    append_annihilation_rows(L, basis_vector(L, j), true, rows);
    if (sides == CenterSides::two_sided) {
      append_annihilation_rows(L, basis_vector(L, j), false, rows);
    }
  }
  return solve_rows(L, rows);
}

Subspace centralizer(const BiHomLieAlgebra& L, const Subspace& S) {
  std::vector<Vector> rows;
  for (const auto& s : S.basis()) append_annihilation_rows(L, s, true, rows);
  return solve_rows(L, rows);
}

SeriesReport lower_central_series(const BiHomLieAlgebra& L) {
  const Subspace whole = Subspace::whole(L.dim(), L.field());
  return run_series(SeriesKind::lower_central, L.dim(), L.field(),
                    [&](const Subspace& s) { return product_subspace(L, whole, s); });
}

SeriesReport derived_series(const BiHomLieAlgebra& L) {
  return run_series(SeriesKind::derived, L.dim(), L.field(),
                    [&](const Subspace& s) { return product_subspace(L, s, s); });
}

SeriesReport lower_central_series(const StructureTable& table) {
  const Subspace whole = Subspace::whole(table.dim(), table.field());
  return run_series(SeriesKind::lower_central, table.dim(), table.field(),
                    [&](const Subspace& s) { return table_product(table, whole, s); });
}

SeriesReport derived_series(const StructureTable& table) {
  return run_series(SeriesKind::derived, table.dim(), table.field(),
                    [&](const Subspace& s) { return table_product(table, s, s); });
}

bool is_ideal(const BiHomLieAlgebra& L, const Subspace& S) {
  if (!S.image(L.alpha()).is_subspace_of(S) || !S.image(L.beta()).is_subspace_of(S)) {
    return false;
  }
  const Subspace whole = Subspace::whole(L.dim(), L.field());
  return product_subspace(L, S, whole).is_subspace_of(S) &&
         product_subspace(L, whole, S).is_subspace_of(S);
}

Subspace ker_alpha_plus_ker_beta(const BiHomLieAlgebra& L) {
  return kernel(L.alpha()) + kernel(L.beta());
}

SeriesReport operator_lower_central_series(const MatrixSubspace& space) {
  const std::size_t n = space.dim_ambient();
  const Field f = space.field();
  for (const auto& a : space.basis()) {
    for (const auto& b : space.basis()) {
      if (!space.contains(commutator(a, b))) {
        throw precondition_error("operator space is not closed under the commutator");
      }
    }
  }
  SeriesReport report{SeriesKind::lower_central, {space.dim()}, false, 0};
  MatrixSubspace current = space;
  while (current.dim() > 0) {
    std::vector<Matrix> products;
    for (const auto& a : space.basis()) {
      for (const auto& b : current.basis()) products.push_back(commutator(a, b));
    }
    MatrixSubspace next = MatrixSubspace::span(n, f, products);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
    report.dims.push_back(current.dim());
  }
  report.terminated_at_zero = report.dims.back() == 0;
  report.steps = report.terminated_at_zero ? report.dims.size() - 1 : 0;
  return report;
}

bool is_characteristically_nilpotent(const BiHomLieAlgebra& L) {
  return operator_lower_central_series(derivations(L, 0, 0).space).terminated_at_zero;
}

BiHomLieAlgebra restrict_to_ideal(const BiHomLieAlgebra& L, const Subspace& S) {
  if (!is_ideal(L, S)) throw precondition_error("restriction needs an ideal");
  const std::size_t m = S.dim();
  const Field f = L.field();
  StructureTable table(m, f);
  Matrix alpha(m, m, f);
  Matrix beta(m, m, f);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& si = S.basis()[i];
    const Vector ai = S.coordinates(L.alpha() * si);
    const Vector bi = S.coordinates(L.beta() * si);
    for (std::size_t r = 0; r < m; ++r) {
      alpha(r, i) = ai[r];
      beta(r, i) = bi[r];
    }
    for (std::size_t j = 0; j < m; ++j) {
      const Vector c = S.coordinates(bracket(L, si, S.basis()[j]));
      for (std::size_t k = 0; k < m; ++k) table(i, j, k) = c[k];
    }
  }
  return BiHomLieAlgebra(std::move(table), std::move(alpha), std::move(beta));
}

namespace {

bool small_direct(const BiHomLieAlgebra& L, CentralSides sides) {
  const MatrixSubspace gamma = centroid(L, 0, 0).space;
  std::vector<Matrix> generators = central_derivations(L, 0, 0, sides).basis();
  generators.push_back(Matrix::identity(L.dim(), L.field()));
  const MatrixSubspace generated = MatrixSubspace::span(L.dim(), L.field(), generators);
  return gamma.is_subspace_of(generated);
}

}  // namespace

bool is_small_centroid(const BiHomLieAlgebra& L, CentralSides sides) {
  if (L.dim() == 2) {
    std::optional<std::pair<Subspace, Subspace>> split;
    try {
      split = decompose_2dim(L).ideals;
    } catch (const unsupported_field_error&) {
      // No rational invariant line: indecomposable over the base field.
    }
    if (split) {
      return small_direct(restrict_to_ideal(L, split->first), sides) &&
             small_direct(restrict_to_ideal(L, split->second), sides);
    }
  }
  return small_direct(L, sides);
}

namespace {

// Roots in the base field of t^2 - trace t + det.
std::optional<std::vector<FieldElement>> quadratic_roots(const FieldElement& trace,
                                                         const FieldElement& det) {
  const Field f = trace.field();
  if (f.is_rational()) {
    const mpq_class disc = trace.rational_value() * trace.rational_value() - 4 * det.rational_value();
    if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_num_mpz_t()) ||
        !mpz_perfect_square_p(disc.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), disc.get_den_mpz_t());
    const mpq_class root(num, den);
    return std::vector<FieldElement>{FieldElement(mpq_class((trace.rational_value() + root) / 2)),
                                     FieldElement(mpq_class((trace.rational_value() - root) / 2))};
  }
  const std::uint64_t p = f.characteristic();
  if (p > (std::uint64_t{1} << 20U)) {
    throw unsupported_field_error("eigenvalue search modulo large primes is not supported");
  }
  std::vector<FieldElement> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    const FieldElement t = FieldElement::integer(static_cast<long>(r), f);
    if ((t * t - trace * t + det).is_zero()) roots.push_back(t);
  }
  if (roots.empty()) return std::nullopt;
  return roots;
}

bool is_scalar_2x2(const Matrix& m) {
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
}

}  // namespace

Decomposition decompose_2dim(const BiHomLieAlgebra& L) {
  if (L.dim() != 2) throw dimension_error("decompose_2dim needs a two-dimensional algebra");
  const Field f = L.field();
  // Every one-dimensional ideal is a common eigenline of the twists and of
  // left and right multiplication by basis vectors.
  std::vector<Matrix> operators{L.alpha(), L.beta()};
  for (std::size_t j = 0; j < 2; ++j) {
    Matrix left(2, 2, f);
    Matrix right(2, 2, f);
    for (std::size_t i = 0; i < 2; ++i) {
      const Vector l = bracket(L, basis_vector(L, j), basis_vector(L, i));
      const Vector r = bracket(L, basis_vector(L, i), basis_vector(L, j));
      for (std::size_t k = 0; k < 2; ++k) {
        left(k, i) = l[k];
        right(k, i) = r[k];
      }
    }
    operators.push_back(std::move(left));
    operators.push_back(std::move(right));
  }
  std::vector<Subspace> candidates;
  const Matrix* pivot = nullptr;
  for (const auto& op : operators) {
    if (!is_scalar_2x2(op)) {
      pivot = &op;
      break;
    }
  }
  if (pivot == nullptr) {
    candidates.push_back(Subspace::span(2, f, {unit_vector(2, 0, f)}));
    candidates.push_back(Subspace::span(2, f, {unit_vector(2, 1, f)}));
  } else {
    const Matrix& m = *pivot;
    const FieldElement trace = m(0, 0) + m(1, 1);
    const FieldElement det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const auto roots = quadratic_roots(trace, det);
    if (!roots) {
      throw unsupported_field_error("eigenvalues of " + m.to_string() +
                                    " are not in the base field");
    }
    for (const FieldElement& ev : *roots) {
      const Subspace line = kernel(m - ev * Matrix::identity(2, f));
      bool seen = false;
      for (const auto& c : candidates) seen = seen || c == line;
      if (!seen) candidates.push_back(line);
    }
  }
  Decomposition result;
  std::vector<Subspace> ideals;
  for (const auto& c : candidates) {
    if (is_ideal(L, c)) ideals.push_back(c);
  }
  if (ideals.size() >= 2) result.ideals = std::make_pair(ideals[0], ideals[1]);

  const Subspace whole = Subspace::whole(2, f);
  const Subspace square = product_subspace(L, whole, whole);
  const Subspace c = center(L);
  result.product_plus_center = square.dim() + c.dim() == 2 && intersection(square, c).is_zero();
  result.criteria_agree = result.product_plus_center == result.ideals.has_value();
  return result;
}

}  // namespace bihom
