#include <benchmark/benchmark.h>

#include "bchrom/density.hpp"
#include "bchrom/generate.hpp"
#include "bchrom/girth.hpp"
#include "bchrom/goodset.hpp"
#include "bchrom/oracle.hpp"
#include "bchrom/pipeline.hpp"

namespace {

using namespace bchrom;

Graph sample(std::size_t n, std::uint64_t seed) {
  return generate_girth_constrained(n, 9, n + n / 8, seed);
}

void BM_Girth(benchmark::State& state) {
  Graph g = sample(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Girth)->RangeMultiplier(2)->Range(25, 400)->Complexity();

void BM_FindGoodSet(benchmark::State& state) {
  Graph g = sample(static_cast<std::size_t>(state.range(0)), 11);
  DensityProfile p = density_profile(g);
  for (auto _ : state) benchmark::DoNotOptimize(find_good_set(g, p));
}
BENCHMARK(BM_FindGoodSet)->Arg(50)->Arg(200);

void BM_Pipeline(benchmark::State& state) {
  Graph g = sample(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_graph(g));
}
BENCHMARK(BM_Pipeline)->Arg(50)->Arg(200);

void BM_ExactOracle(benchmark::State& state) {
  Graph g = sample(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(exact_b_chromatic(g));
}
BENCHMARK(BM_ExactOracle)->DenseRange(8, 14, 3);

}  // namespace
BENCHMARK_MAIN();
