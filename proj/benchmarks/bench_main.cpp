#include <benchmark/benchmark.h>

#include "gperiod/contraction.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/periodic_solver.hpp"

namespace {

using namespace gperiod;

void BM_SolveInterleaved(benchmark::State& state) {
  const Instance inst(SequenceSpace(SequenceFamily::Interleaved, 0.0, 1.0), ShiftMap{});
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, 4, PointRef::term(1)));
}
BENCHMARK(BM_SolveInterleaved);

void BM_AnalyzeSampled(benchmark::State& state) {
  const Instance inst(SequenceSpace(SequenceFamily::Alternating, 0.0, 1.0), ShiftMap{});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(inst, 2, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_AnalyzeSampled)->Arg(200)->Arg(2000);

void BM_AlphaExactRandom(benchmark::State& state) {
  const Instance inst = random_instance(7, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_exact(inst, 6));
}
BENCHMARK(BM_AlphaExactRandom)->Arg(4)->Arg(8)->Arg(12);

void BM_OracleFullScan(benchmark::State& state) {
  const Instance inst = random_instance(11, 12);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_periodic(inst, 6, true));
}
BENCHMARK(BM_OracleFullScan);

void BM_RandomInstance(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_instance(seed++, 12));
}
BENCHMARK(BM_RandomInstance);

}  // namespace

BENCHMARK_MAIN();
