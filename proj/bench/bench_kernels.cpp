// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "kisskit/kiss5.hpp"
#include "kisskit/kiss6.hpp"
#include "kisskit/kiss9.hpp"
#include "kisskit/pack5.hpp"

using namespace kisskit;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

const PointConfiguration& leech9() {
  static const PointConfiguration c = build_kissing9(build_code_table());
  return c;
}

void BM_Gram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gram(leech9(), exec_of(state)));
}

void BM_Spectrum(benchmark::State& state) {
  const GramMatrix g = gram(leech9());
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g, exec_of(state)));
}

void BM_ValidateKissing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_kissing(leech9(), std::nullopt, exec_of(state)));
}

void BM_HoleSubsets(benchmark::State& state) {
  const HoleSet h = holes_for(Kind5::L5);
  for (auto _ : state) benchmark::DoNotOptimize(hole_subsets_16(h, exec_of(state)));
}

void BM_MinDistance(benchmark::State& state) {
  const PeriodicPacking p = assemble_packing(builtin_coloring("q5"));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance2(p, exec_of(state)));
}

void BM_Uniqueness(benchmark::State& state) {
  const PointConfiguration c = build5(Kind5::R5);
  for (auto _ : state) benchmark::DoNotOptimize(uniform_uniqueness(c, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Gram)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateKissing)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HoleSubsets)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistance)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Uniqueness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
