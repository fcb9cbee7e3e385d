#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "algebra_file.hpp"
#include "bihom/catalog.hpp"
#include "bihom/errors.hpp"
#include "commands.hpp"
#include "oracle.hpp"

using namespace bihom;
using oracle::q;

namespace {

const std::string kData = BIHOM_DATA_DIR;
const std::string kExamples = kData + "/examples/";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("bihom_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::uint64_t sample_seed() {
  const char* env = std::getenv("BIHOM_SAMPLE_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 20240601u;
}

}  // namespace

TEST(AlgebraFile, RoundTripIsByteIdentical) {
  for (const char* name : {"heisenberg_m1.json", "L1_10.json", "L2_1.json", "L3_1.json", "skew_violation.json"}) {
    const std::string text = cli::read_text_file(kExamples + name);
    EXPECT_EQ(cli::serialize_algebra_file(cli::parse_algebra_file(text)), text) << name;
  }
  const std::string w = cli::read_text_file(kExamples + "witness_identity_2.json");
  EXPECT_EQ(cli::serialize_matrix_file(cli::parse_matrix_file(w)), w);
}

TEST(AlgebraFile, RandomAlgebrasRoundTrip) {
  oracle::Rng rng(sample_seed());
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<BracketTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng.integer(0, 1)) terms.push_back({i, j, static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1)), rng.nonzero()});
    const Field f = rng.integer(0, 1) ? Field::rational() : Field::prime(7);
    const BiHomLieAlgebra L = BiHomLieAlgebra(StructureTable(n, Field::rational(), terms), rng.matrix(n),
                                              rng.matrix(n)).to_field(f);
    const cli::AlgebraFile file{L, "random", std::nullopt};
    const std::string text = cli::serialize_algebra_file(file);
    const cli::AlgebraFile back = cli::parse_algebra_file(text);
    EXPECT_EQ(back.algebra, L);
    EXPECT_EQ(back.name, file.name);
    EXPECT_EQ(cli::serialize_algebra_file(back), text);
  }
}

TEST(AlgebraFile, ParseErrorsNameTheRecord) {
  const auto expect_error = [](const std::string& text, const std::string& where) {
    try {
      cli::parse_algebra_file(text);
      ADD_FAILURE() << "no error for " << text;
    } catch (const parse_error& e) {
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  };
  const std::string head = R"({"format_version": 1, "field": "rational", "dim": 2, )";
  const std::string twists = R"("alpha": ["1","0","0","1"], "beta": ["1","0","0","1"]})";
  expect_error(head + R"("brackets": [{"i":1,"j":2,"k":1,"value":"1/0"}], )" + twists, "brackets[0].value");
  expect_error(head + R"("brackets": [{"i":1,"j":3,"k":1,"value":"1"}], )" + twists, "brackets[0].j");
  expect_error(head + R"("brackets": [{"i":1,"j":2,"k":1,"value":"1"}, {"i":1,"j":2,"k":1,"value":"2"}], )" + twists,
               "brackets[1]");
  expect_error(head + R"("brackets": [], "alpha": ["1"], "beta": ["1","0","0","1"]})", "alpha");
  expect_error(R"({"format_version": 2})", "format_version");
  expect_error(R"({"format_version": 1, "field": {"fp": 4}, "dim": 1})", "field");
  expect_error("{\"format_version\": 1,\n \"field\": ", "malformed JSON");
}

TEST(CliCheck, ExitCodes) {
  EXPECT_EQ(run({"check", kExamples + "heisenberg_m1.json"}).code, 0);
  const Result bad = run({"check", kExamples + "skew_violation.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("skew (i=1,j=2,s=1)"), std::string::npos);
  const std::string zero_den =
      R"({"format_version": 1, "field": "rational", "dim": 1, "brackets": [{"i":1,"j":1,"k":1,"value":"1/0"}], "alpha": ["1"], "beta": ["1"]})";
  const Result parse = run({"check", temp_file("zero_den.json", zero_den)});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("brackets[0].value"), std::string::npos);
  EXPECT_EQ(run({"check", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliCheck, RecordsOutput) {
  const Result r = run({"--output", "records", "check", kExamples + "skew_violation.json"});
  EXPECT_NE(r.out.find("axiom\tname=skew\tvalue=fail\n"), std::string::npos);
  EXPECT_NE(r.out.find("violation\taxiom=skew\tindex1=1\tindex2=2\tindex3=1\tvalue=1\n"), std::string::npos);
  const Result r2 = run({"check", kExamples + "L1_10.json", "--output", "records"});
  EXPECT_EQ(r2.code, 0);
  EXPECT_NE(r2.out.find("result\tvalue=BiHom-Lie algebra"), std::string::npos);
}

TEST(CliDer, Examples) {
  const Result r = run({"der", kExamples + "L1_10.json", "--lambda", "1", "--mu", "1", "--gamma", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 2"), std::string::npos);
  EXPECT_NE(r.out.find("basis[2]"), std::string::npos);
  const Result omega = run({"der", kExamples + "L2_1.json", "--lambda", "0", "--mu", "0", "--gamma", "0"});
  EXPECT_NE(omega.out.find("Omega"), std::string::npos);
  const Result norm = run({"der", kExamples + "L1_10.json", "--lambda", "2", "--mu", "3", "--gamma", "1",
                           "--normalize"});
  EXPECT_NE(norm.out.find("normalized: (1/2, 1, 0) case 1"), std::string::npos);
  EXPECT_LT(norm.out.find("normalized"), norm.out.find("dimension"));
  EXPECT_EQ(run({"der", kExamples + "L1_10.json", "--lambda", "x"}).code, 2);
}

TEST(CliStructure, L1_10Report) {
  const Result r = run({"--output", "records", "structure", kExamples + "L1_10.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cn\tvalue=no"), std::string::npos);
  EXPECT_NE(r.out.find("small-centroid\tvalue=yes"), std::string::npos);
  EXPECT_NE(r.out.find("derived-dims\tvalue=2,1,0"), std::string::npos);
  EXPECT_NE(r.out.find("decomposable\tvalue=no"), std::string::npos);
}

TEST(CliFingerprint, Deterministic) {
  const Result a = run({"fingerprint", kExamples + "L2_1.json"});
  const Result b = run({"fingerprint", kExamples + "L2_1.json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("rank alpha: 1"), std::string::npos);
}

TEST(CliIso, Verdicts) {
  const Result w = run({"iso", kExamples + "L2_1.json", kExamples + "L2_1.json", "--witness",
                        kExamples + "witness_identity_2.json"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("isomorphic (witness verified)"), std::string::npos);
  const Result b = run({"iso", kExamples + "L2_1.json", kExamples + "L3_1.json", "--brute", "3"});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.out.find("no witness over F_3"), std::string::npos);
  const Result f = run({"iso", kExamples + "L2_1.json", kExamples + "L3_1.json"});
  EXPECT_EQ(f.code, 1);
  EXPECT_NE(f.out.find("fingerprints differ"), std::string::npos);
  const Result same = run({"iso", kExamples + "L1_10.json", kExamples + "L1_10.json"});
  EXPECT_EQ(same.code, 0);
  EXPECT_NE(same.out.find("inconclusive"), std::string::npos);
  EXPECT_EQ(run({"iso", kExamples + "L2_1.json", kExamples + "L3_1.json", "--brute", "4"}).code, 2);
  EXPECT_EQ(run({"iso", kExamples + "L2_1.json", kExamples + "L3_1.json", "--brute", "3", "--witness",
                 kExamples + "witness_identity_2.json"})
                .code,
            2);
}

TEST(CliIso, BruteRejectsPrimeDividingDenominators) {
  const BiHomLieAlgebra L = build("L1_8", {{"a", q(2)}, {"x", q(3)}});
  const std::string path = temp_file("l18.json", cli::serialize_algebra_file({L, std::nullopt, std::nullopt}));
  const Result r = run({"iso", path, path, "--brute", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("smallest admissible prime is 3"), std::string::npos);
}

TEST(CliCatalog, SingleEntryAndParams) {
  const Result r = run({"catalog", "--entry", "L1_10", "--kmax", "0", "--lmax", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("L1_10 {} k=0 l=0: match"), std::string::npos);
  const Result p = run({"catalog", "--entry", "L1_17", "--params", "z=2", "--kmax", "1", "--lmax", "1"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("summary: 4 match, 0 mismatch, 0 uncovered"), std::string::npos);
  EXPECT_EQ(run({"catalog", "--params", "z=2"}).code, 2);
  EXPECT_EQ(run({"catalog", "--entry", "L1_17", "--params", "z=0"}).code, 2);
  EXPECT_EQ(run({"catalog", "--entry", "nope"}).code, 2);
}

// The full replay is the table-replication check; its exit code reflects
// whether every row matched.
TEST(CliCatalog, FullReplayAllMatch) {
  const Result r = run({"catalog"});
  EXPECT_EQ(r.code, 0) << r.out.substr(r.out.rfind("summary"));
}

// Randomized, seed taken from BIHOM_SAMPLE_SEED: built algebras written to a
// file pass `check`, and catalog verdicts are deterministic.
TEST(CliProperty, RandomParametersThroughTheCli) {
  oracle::Rng rng(sample_seed());
  const auto& cat = catalog();
  for (int t = 0; t < 25; ++t) {
    const CatalogEntry& e = cat[static_cast<std::size_t>(rng.integer(0, static_cast<long>(cat.size()) - 1))];
    ParamAssignment params;
    std::string text;
    for (const auto& p : e.params) {
      const FieldElement v = p.nonzero ? rng.nonzero(4, 3) : rng.rational(4, 3);
      params.insert_or_assign(p.name, v);
      text += (text.empty() ? "" : ",") + p.name + "=" + v.to_string();
    }
    ASSERT_TRUE(admissible(e, params));
    const std::string path = temp_file("rand.json", cli::serialize_algebra_file({build(e.id, params), e.label, "catalog"}));
    EXPECT_EQ(run({"check", path}).code, 0) << e.id << " " << text;
    std::vector<std::string> args{"--output", "records", "catalog", "--entry", e.id, "--kmax", "1", "--lmax", "1"};
    if (!text.empty()) {
      args.push_back("--params");
      args.push_back(text);
    }
    const Result a = run(args), b = run(args);
    EXPECT_NE(a.code, 2) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(GoldenData, MatchesExport) {
  const std::string shipped = cli::read_text_file(kData + "/catalog_2dim.json");
  EXPECT_EQ(shipped, cli::catalog_golden_json());
  char hash[19];
  std::snprintf(hash, sizeof hash, "0x%016llx", static_cast<unsigned long long>(sample_set_hash()));
  EXPECT_NE(shipped.find(hash), std::string::npos);
}
