#include <gtest/gtest.h>

#include <set>

#include "bihom/catalog.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/structure.hpp"
#include "oracle.hpp"

using namespace bihom;
using oracle::q;

namespace {
const Field kQ = Field::rational();
}

TEST(Catalog, HasEveryLabelledFamily) {
  std::set<std::string> ids;
  for (const auto& e : catalog()) ids.insert(e.id);
  EXPECT_EQ(ids.size(), catalog().size());
  EXPECT_EQ(ids.size(), 25u);
  for (const char* id : {"L1_1", "L2_1", "L3_1", "L4_1", "L5_1", "L1_2", "L1_3", "L1_4", "L1_5", "L1_6",
                         "L1_7", "L1_8", "L1_9", "L1_10", "L1_11", "L2_11", "L3_11", "L1_12", "L1_13",
                         "L2_13", "L3_13", "L1_14", "L1_15", "L1_16", "L1_17"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_EQ(&catalog_entry("L_1^13"), &catalog_entry("L1_13"));
  EXPECT_THROW(catalog_entry("L9_9"), precondition_error);
}

TEST(Build, Examples) {
  const BiHomLieAlgebra L = build("L1_10", {});
  EXPECT_EQ(L.constant(0, 1, 0), q(1));
  EXPECT_EQ(L.constant(0, 1, 1), q(1));
  EXPECT_EQ(L.alpha(), Matrix::identity(2, kQ));
  EXPECT_TRUE(check_all(build("L1_1", {{"z1", q(0)}, {"b", q(2)}, {"y", q(3)}})).ok());
  EXPECT_EQ(build("L1_8", {{"a", q(2)}, {"x", q(3)}}).constant(1, 0, 0), q(-3, 2));
}

TEST(Build, RejectsInadmissibleOrMissingParameters) {
  EXPECT_THROW(build("L1_8", {{"a", q(0)}, {"x", q(3)}}), precondition_error);
  EXPECT_THROW(build("L1_8", {{"a", q(2)}}), precondition_error);
  EXPECT_THROW(build("L1_8", {{"a", q(2)}, {"x", q(3)}, {"w", q(1)}}), precondition_error);
}

TEST(ExpectedRows, Shapes) {
  EXPECT_EQ(expected_rows("L1_1").size(), 3u);
  const auto& r8 = expected_rows("L1_8");
  ASSERT_EQ(r8.size(), 1u);
  EXPECT_EQ(r8[0].centroid.cells[3], "c1/(a^k*x^l)");
  std::set<std::string> guards;
  for (const auto& r : expected_rows("L1_13")) guards.insert(r.guard);
  EXPECT_TRUE(guards.count("k==0 && l==0 && z1==-1"));
  EXPECT_TRUE(guards.count("k==0 && l==0 && z1==0"));
  EXPECT_TRUE(guards.count("k==0 && l==0 && z1!=-1"));
}

TEST(Samples, DefaultsAndHash) {
  EXPECT_EQ(default_sample_values(), (std::vector<std::string>{"2", "3", "1/2"}));
  for (const auto& e : catalog()) {
    const auto samples = sample_assignments(e);
    EXPECT_GE(samples.size(), e.params.empty() ? 1u : 3u) << e.id;
    for (const auto& s : samples) EXPECT_TRUE(admissible(e, s)) << e.id << format_assignment(s);
  }
  EXPECT_EQ(sample_set_hash(), sample_set_hash());
  EXPECT_EQ(format_assignment({{"b", q(2)}, {"a", q(1, 2)}}), "{a=1/2, b=2}");
}

TEST(Instantiate, SlotsBecomeBasis) {
  const MatrixSubspace s = instantiate({{"c1", "(l*z+k)*c1", "0", "c1"}}, 2,
                                       {{"z", q(2)}, {"k", q(1)}, {"l", q(1)}});
  ASSERT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s.contains(Matrix::from_rows({{1, 3}, {0, 1}})));
  EXPECT_EQ(instantiate({{"0", "0", "0", "0"}}, 2, {}).dim(), 0u);
  EXPECT_EQ(instantiate({{"d1", "d2", "d1", "d2"}}, 2, {}).dim(), 2u);
}

TEST(VerifyEntry, L1_10AndL1_17) {
  const EntryVerdict v = verify_entry("L1_10", {}, 0, 0);
  EXPECT_EQ(v.status, VerdictStatus::match);
  EXPECT_EQ(v.derivations.dim(), 2u);
  EXPECT_EQ(v.cn, std::optional<bool>(false));
  EXPECT_EQ(v.small, std::optional<bool>(true));

  const EntryVerdict w = verify_entry("L1_17", {{"z", q(2)}}, 1, 1);
  EXPECT_EQ(w.status, VerdictStatus::match);
  EXPECT_TRUE(w.centroid.same_span(MatrixSubspace(2, kQ, {Matrix::from_rows({{1, 3}, {0, 1}})})));
}

// Table row for L_3^1 at the origin, as printed.
TEST(VerifyEntry, L3_1AtOriginMatchesTable) {
  const EntryVerdict v = verify_entry("L3_1", {{"b", q(2)}, {"y", q(3)}}, 0, 0);
  EXPECT_EQ(v.status, VerdictStatus::match) << (v.diffs.empty() ? "" : v.diffs.front());
}

// Direct evaluation of the computed centroid at every sample: members are
// exactly the instantiated table pattern whenever the verdict is a match.
TEST(VerifyEntry, MatchesAreBackedByDirectEvaluation) {
  for (const auto& inst : oracle::catalog_instances()) {
    for (unsigned k = 0; k <= 1; ++k) {
      const EntryVerdict v = verify_entry(inst.entry->id, inst.params, k, 1 - k);
      for (const auto& d : v.centroid.basis())
        EXPECT_TRUE(oracle::is_member(inst.algebra, d, q(1), q(1), q(0), k, 1 - k));
      for (const auto& d : v.derivations.basis())
        EXPECT_TRUE(oracle::is_member(inst.algebra, d, q(1), q(1), q(1), k, 1 - k));
    }
  }
}

TEST(KnownIdeals, VerifyOnEverySample) {
  for (const auto& inst : oracle::catalog_instances()) {
    Vector v;
    for (long c : inst.entry->known_ideal) v.push_back(q(c));
    const Subspace S = Subspace::span(2, kQ, {v});
    EXPECT_EQ(S.dim(), 1u);
    EXPECT_TRUE(is_ideal(inst.algebra, S)) << inst.entry->id;
  }
}
