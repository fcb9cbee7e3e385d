#include <gtest/gtest.h>

#include "bihom/catalog.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/structure.hpp"
#include "oracle.hpp"

using namespace bihom;
using oracle::q;

namespace {

const Field kQ = Field::rational();

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(q(x));
  return v;
}

Subspace span(std::size_t n, std::initializer_list<Vector> vs) {
  return Subspace::span(n, kQ, std::vector<Vector>(vs));
}

BiHomLieAlgebra abelian(std::size_t n) {
  return BiHomLieAlgebra(StructureTable(n, kQ), Matrix::identity(n, kQ), Matrix::identity(n, kQ));
}

// Exhaustive center over F_3 for a 2-dim algebra.
std::size_t center_size_mod3(const BiHomLieAlgebra& L) {
  const BiHomLieAlgebra M = L.to_field(Field::prime(3));
  std::size_t count = 0;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      const Vector x{FieldElement::integer(a, M.field()), FieldElement::integer(b, M.field())};
      bool central = true;
      for (std::size_t j = 0; j < 2; ++j) central = central && is_zero(oracle::product(M, x, oracle::basis(M, j)));
      if (central) ++count;
    }
  return count;
}

}  // namespace

TEST(ProductSubspace, Examples) {
  const BiHomLieAlgebra L = build("L1_10", {});
  const Subspace whole = Subspace::whole(2, kQ);
  EXPECT_EQ(product_subspace(L, whole, Subspace(2, kQ)).dim(), 0u);
  EXPECT_EQ(product_subspace(L, whole, whole), span(2, {vec({1, 1})}));
  EXPECT_EQ(product_subspace(abelian(3), Subspace::whole(3, kQ), Subspace::whole(3, kQ)).dim(), 0u);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(abelian(2)).dim(), 2u);
  EXPECT_EQ(center(build("L1_10", {})).dim(), 0u);
  EXPECT_EQ(center_size_mod3(build("L1_10", {})), 1u);
  const BiHomLieAlgebra L211 = build("L2_11", {});
  EXPECT_EQ(center(L211), span(2, {vec({1, 0})}));
  EXPECT_EQ(center_size_mod3(L211), 3u);
}

TEST(Center, TwoSidedIsInsideOneSided) {
  for (const auto& inst : oracle::catalog_instances()) {
    EXPECT_TRUE(center(inst.algebra, CenterSides::two_sided).is_subspace_of(center(inst.algebra)));
  }
}

TEST(Centralizer, Examples) {
  const BiHomLieAlgebra L = build("L1_10", {});
  EXPECT_EQ(centralizer(L, Subspace(2, kQ)), Subspace::whole(2, kQ));
  EXPECT_EQ(centralizer(L, Subspace::whole(2, kQ)), center(L));
  const BiHomLieAlgebra L11 = build("L1_1", {{"z1", q(0)}, {"b", q(2)}, {"y", q(3)}});
  EXPECT_EQ(centralizer(L11, span(2, {vec({1, 0})})), span(2, {vec({0, 1})}));
}

TEST(Series, Examples) {
  const SeriesReport a = lower_central_series(abelian(2));
  EXPECT_TRUE(a.terminated_at_zero);
  EXPECT_EQ(a.steps, 1u);
  EXPECT_TRUE(derived_series(abelian(2)).terminated_at_zero);

  const BiHomLieAlgebra L = build("L1_10", {});
  const SeriesReport lcs = lower_central_series(L);
  EXPECT_FALSE(lcs.terminated_at_zero);
  EXPECT_EQ(lcs.dims.back(), 1u);
  const SeriesReport ds = derived_series(L);
  EXPECT_EQ(ds.dims, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(ds.steps, 2u);

  const BiHomLieAlgebra H = heisenberg(1, q(4), q(9), {q(2)}, {q(3)});
  EXPECT_EQ(lower_central_series(H).dims, (std::vector<std::size_t>{3, 1, 0}));
}

TEST(Ideal, Examples) {
  const BiHomLieAlgebra L = build("L1_10", {});
  EXPECT_TRUE(is_ideal(L, Subspace(2, kQ)));
  EXPECT_TRUE(is_ideal(L, Subspace::whole(2, kQ)));
  EXPECT_FALSE(is_ideal(L, span(2, {vec({1, 0})})));
  EXPECT_TRUE(is_ideal(L, span(2, {vec({1, 1})})));
  for (const auto& inst : oracle::catalog_instances()) {
    if (inst.entry->id == "L1_10") continue;
    EXPECT_TRUE(is_ideal(inst.algebra, span(2, {vec({1, 0})}))) << inst.entry->id;
  }
}

TEST(KerSum, Examples) {
  EXPECT_EQ(ker_alpha_plus_ker_beta(build("L1_10", {})).dim(), 0u);
  const BiHomLieAlgebra L11 = build("L1_1", {{"z1", q(0)}, {"b", q(2)}, {"y", q(3)}});
  EXPECT_EQ(ker_alpha_plus_ker_beta(L11), span(2, {vec({1, 0})}));
  EXPECT_TRUE(is_ideal(L11, ker_alpha_plus_ker_beta(L11)));
  EXPECT_EQ(ker_alpha_plus_ker_beta(build("L1_9", {})), Subspace::whole(2, kQ));
}

TEST(KerSum, IsAnIdealOnEveryCatalogSample) {
  for (const auto& inst : oracle::catalog_instances()) {
    EXPECT_TRUE(is_ideal(inst.algebra, ker_alpha_plus_ker_beta(inst.algebra))) << inst.entry->id;
  }
}

TEST(CharacteristicNilpotency, Examples) {
  EXPECT_TRUE(is_characteristically_nilpotent(build("L1_1", {{"z1", q(2)}, {"b", q(2)}, {"y", q(3)}})));
  const BiHomLieAlgebra L = build("L1_10", {});
  const Matrix A = Matrix::from_rows({{1, 0}, {1, 0}}), B = Matrix::from_rows({{0, 1}, {0, 1}});
  // [A, B] = AB - BA = B - A by direct 2x2 arithmetic; [A, B - A] = B - A, so
  // the series never reaches zero.
  EXPECT_EQ(oracle::mul(A, B) - oracle::mul(B, A), B - A);
  EXPECT_FALSE(is_characteristically_nilpotent(L));
}

TEST(CharacteristicNilpotency, NonClosedSpaceIsRejected) {
  const Field f = kQ;
  const MatrixSubspace s(2, f, {Matrix::unit(2, 0, 1, f), Matrix::unit(2, 1, 0, f)});
  EXPECT_THROW(operator_lower_central_series(s), precondition_error);
}

TEST(SmallCentroid, Examples) {
  EXPECT_TRUE(is_small_centroid(build("L1_8", {{"a", q(2)}, {"x", q(3)}})));
  const BiHomLieAlgebra id_only(StructureTable(2, kQ, {{0, 1, 0, q(1)}, {1, 0, 0, q(-1)}}),
                                Matrix::identity(2, kQ), Matrix::identity(2, kQ));
  EXPECT_TRUE(centroid(id_only, 0, 0).space.same_span(
      MatrixSubspace(2, kQ, {Matrix::identity(2, kQ)})));
  EXPECT_TRUE(is_small_centroid(id_only));
}

// Table value for L_3^1 as listed.
TEST(SmallCentroid, L3_1ListedAsNotSmall) {
  EXPECT_FALSE(is_small_centroid(build("L3_1", {{"b", q(2)}, {"y", q(3)}})));
}

TEST(Decompose, Examples) {
  const Decomposition d = decompose_2dim(build("L3_1", {{"b", q(2)}, {"y", q(3)}}));
  ASSERT_TRUE(d.ideals.has_value());
  EXPECT_EQ((d.ideals->first + d.ideals->second), Subspace::whole(2, kQ));
  EXPECT_TRUE(d.ideals->first == span(2, {vec({1, 0})}) || d.ideals->second == span(2, {vec({1, 0})}));
  EXPECT_FALSE(decompose_2dim(build("L1_10", {})).ideals.has_value());
  const Decomposition ab = decompose_2dim(abelian(2));
  ASSERT_TRUE(ab.ideals.has_value());
  EXPECT_THROW(decompose_2dim(abelian(3)), dimension_error);
}

TEST(Decompose, IrrationalSpectrumIsRejected) {
  const Matrix rot = Matrix::from_rows({{0, -2}, {1, 0}});  // t^2 + 2
  const BiHomLieAlgebra L(StructureTable(2, kQ), rot, Matrix::identity(2, kQ));
  EXPECT_THROW(decompose_2dim(L), unsupported_field_error);
}

TEST(StructureProperty, DecomposableFamiliesMatchTheListAndAreNonregular) {
  for (const auto& inst : oracle::catalog_instances()) {
    const Decomposition d = decompose_2dim(inst.algebra);
    EXPECT_EQ(d.ideals.has_value(), inst.entry->decomposable)
        << inst.entry->id << " " << format_assignment(inst.params);
    if (d.ideals) {
      EXPECT_FALSE(is_regular(inst.algebra)) << inst.entry->id;
      EXPECT_TRUE(d.product_plus_center) << inst.entry->id;
      EXPECT_TRUE(is_ideal(inst.algebra, d.ideals->first) && is_ideal(inst.algebra, d.ideals->second));
    }
  }
}

TEST(StructureProperty, RegularSeriesAgreeWithInducedLie) {
  for (const auto& inst : oracle::catalog_instances()) {
    if (!is_regular(inst.algebra)) continue;
    const StructureTable g = induced_lie(inst.algebra);
    EXPECT_EQ(lower_central_series(inst.algebra).terminated_at_zero, lower_central_series(g).terminated_at_zero)
        << inst.entry->id;
    EXPECT_EQ(derived_series(inst.algebra).terminated_at_zero, derived_series(g).terminated_at_zero)
        << inst.entry->id;
  }
}

TEST(StructureProperty, CenterInsideEveryCentralizerAndSeriesBounds) {
  oracle::Rng rng(41);
  for (const auto& inst : oracle::catalog_instances()) {
    const BiHomLieAlgebra& L = inst.algebra;
    for (int t = 0; t < 3; ++t) {
      const Subspace S = span(2, {Vector{rng.rational(), rng.rational()}});
      EXPECT_TRUE(center(L).is_subspace_of(centralizer(L, S)));
    }
    const SeriesReport lcs = lower_central_series(L), ds = derived_series(L);
    for (std::size_t i = 1; i < lcs.dims.size(); ++i) EXPECT_LE(lcs.dims[i], lcs.dims[i - 1]);
    for (std::size_t i = 0; i < ds.dims.size(); ++i) {
      const std::size_t lc = i < lcs.dims.size() ? lcs.dims[i] : lcs.dims.back();
      EXPECT_LE(ds.dims[i], lc) << inst.entry->id;
    }
    EXPECT_EQ(lcs.terminated_at_zero, lcs.dims.back() == 0);
  }
}

TEST(RestrictToIdeal, KeepsTheAxioms) {
  const BiHomLieAlgebra H = heisenberg(2, q(4), q(9), {q(2), q(1)}, {q(3), q(1)});
  const Subspace z = span(5, {vec({0, 0, 0, 0, 1})});
  ASSERT_TRUE(is_ideal(H, z));
  const BiHomLieAlgebra R = restrict_to_ideal(H, z);
  EXPECT_EQ(R.dim(), 1u);
  EXPECT_TRUE(check_all(R).ok());
  EXPECT_EQ(R.alpha(), Matrix::diagonal({q(4)}));
}
