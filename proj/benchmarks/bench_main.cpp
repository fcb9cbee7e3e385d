#include <benchmark/benchmark.h>

#include "bihom/algebra.hpp"
#include "bihom/catalog.hpp"
#include "bihom/derivations.hpp"
#include "bihom/isomorphism.hpp"

using namespace bihom;

namespace {

FieldElement q(long n, long d = 1) { return FieldElement::ratio(n, d); }

// Derivation space of a Heisenberg algebra of dimension 2m+1; the system
// has (2m+1)^2 unknowns.
void BM_GenDerSpaceHeisenberg(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<FieldElement> bs, ys;
  for (std::size_t i = 0; i < m; ++i) {
    bs.push_back(q(static_cast<long>(i) + 2));
    ys.push_back(q(static_cast<long>(2 * i) + 3));
  }
  const BiHomLieAlgebra H = heisenberg(m, q(5), q(7), bs, ys);
  const GenDerivationParams p = GenDerivationParams::make(1, 1, 1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gen_der_space(H, p));
  state.counters["dim"] = static_cast<double>(H.dim());
}
BENCHMARK(BM_GenDerSpaceHeisenberg)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GenDerSpaceOverFp(benchmark::State& state) {
  const BiHomLieAlgebra H = heisenberg(2, q(5), q(7), {q(2), q(3)}, {q(3), q(4)}).to_field(Field::prime(101));
  const GenDerivationParams p = GenDerivationParams::make(1, 1, 1, 1, 1).to_field(Field::prime(101));
  for (auto _ : state) benchmark::DoNotOptimize(gen_der_space(H, p));
}
BENCHMARK(BM_GenDerSpaceOverFp)->Unit(benchmark::kMillisecond);

// Full replay of the 2-dimensional catalog over (k, l) in {0,1,2}^2.
void BM_CatalogReplay(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t matches = 0;
    for (const auto& e : catalog()) {
      for (const auto& s : sample_assignments(e)) {
        for (unsigned k = 0; k <= 2; ++k) {
          for (unsigned l = 0; l <= 2; ++l) {
            matches += verify_entry(e.id, s, k, l).status == VerdictStatus::match;
          }
        }
      }
    }
    benchmark::DoNotOptimize(matches);
  }
}
BENCHMARK(BM_CatalogReplay)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const BiHomLieAlgebra L = build("L1_13", {{"z1", q(1)}, {"t1", q(3)}, {"z", q(2)}});
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(L));
}
BENCHMARK(BM_Fingerprint)->Unit(benchmark::kMicrosecond);

// Exhaustive search over GL_n(F_p) with no witness, so the whole group is scanned.
void BM_BruteForceIsoNoWitness(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const BiHomLieAlgebra A = build("L2_1", {{"b", q(2)}, {"y", q(3)}});
  const BiHomLieAlgebra B = build("L3_1", {{"b", q(2)}, {"y", q(3)}});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_iso(A, B, p));
}
BENCHMARK(BM_BruteForceIsoNoWitness)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_BruteForceIsoDim3(benchmark::State& state) {
  const BiHomLieAlgebra H = heisenberg(1, q(1), q(1), {q(1)}, {q(1)});
  const BiHomLieAlgebra H2 = heisenberg(1, q(2), q(1), {q(1)}, {q(1)});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_iso(H, H2, 3));
}
BENCHMARK(BM_BruteForceIsoDim3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
