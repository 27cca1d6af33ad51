#include <benchmark/benchmark.h>

#include <algorithm>

#include "trigpatch/assembly.hpp"
#include "trigpatch/generate.hpp"
#include "trigpatch/oracle.hpp"
#include "trigpatch/roots.hpp"
#include "trigpatch/skeleton.hpp"

using namespace trigpatch;

namespace {

void BM_IsolateDiscriminantRoots(benchmark::State& state) {
  const auto g = generate_patchwork(state.range(0), 7);
  const auto& cells = g.patchwork.cells();
  const auto largest = std::max_element(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.polygon.doubled_area() < b.polygon.doubled_area();
  });
  const Poly1 d = discriminant_y(largest->curve);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(d));
}
BENCHMARK(BM_IsolateDiscriminantRoots)->DenseRange(1, 4);

void BM_Assemble(benchmark::State& state) {
  const auto g = generate_patchwork(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(g.patchwork));
}
BENCHMARK(BM_Assemble)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_AssembleUnchecked(benchmark::State& state) {
  const auto g = generate_patchwork(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(g.patchwork, {.paranoid = false}));
}
BENCHMARK(BM_AssembleUnchecked)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto g = generate_patchwork(state.range(0), 2, {.convex = true});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sign_array(g.patchwork, *g.lifting));
}
BENCHMARK(BM_Oracle)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
