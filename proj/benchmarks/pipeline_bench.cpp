#include <benchmark/benchmark.h>

#include "sparsenerve/sparsenerve.hpp"

using namespace sparsenerve;

namespace {

MetricSpace planar(std::size_t n) {
  return load_point_cloud(uniform_cube_points(n, 2, 7), Norm::l2);
}

void BM_CoverSet(benchmark::State& state) {
  const auto m = planar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_cover_set(m, 0, 0.2, 0.5));
}
BENCHMARK(BM_CoverSet)->Arg(100)->Arg(400);

void BM_Filtration(benchmark::State& state) {
  const auto m = planar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_sparse_filtration(m, 0.5, {{}, 1}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Filtration)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond);

void BM_PresentationK1(benchmark::State& state) {
  const auto f = build_sparse_filtration(planar(static_cast<std::size_t>(state.range(0))), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(present(f, 1, 1));
}
BENCHMARK(BM_PresentationK1)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CountK1(benchmark::State& state) {
  const auto f = build_sparse_filtration(planar(static_cast<std::size_t>(state.range(0))), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(count_presentation(f, 1, 1));
}
BENCHMARK(BM_CountK1)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
