// Serial reference kernels against their OpenMP counterparts on real
// workloads: orbit decomposition, fiber histograms and Hall table builds.

#include <benchmark/benchmark.h>

#include "hallq/hall.hpp"

using namespace hallq;

namespace {

quiver::QuiverWithAut kronecker() { return {{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, {0, 1}, {0, 1}}; }
quiver::QuiverWithAut a3_fold() { return {{"1", "2", "3"}, {{"h1", 0, 1}, {"h3", 2, 1}}, {2, 1, 0}, {1, 0}}; }

rep::Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? rep::Exec::Serial : rep::Exec::Parallel; }

void BM_OrbitTable(benchmark::State& state) {
  const auto ctx = rep::make_context(quiver::Folded(kronecker()), 2, 1);
  const auto nu = ctx.quiver->dim({2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(rep::orbit_table(ctx, nu, mode(state)).num_orbits());
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_OrbitTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiberHistograms(benchmark::State& state) {
  hall::Options opts;
  opts.exec = mode(state);
  const quiver::Folded Q(kronecker());
  const auto a = Q.dim({2, 0}), b = Q.dim({0, 3});
  for (auto _ : state) {
    hall::Workbench wb(rep::make_context(Q, 2, 1), opts);
    wb.orbits(a + b);
    std::uint64_t total = 0;
    for (const auto& M : wb.classes(a))
      for (const auto& N : wb.classes(b)) total += wb.fiber_histogram(M, N).size();
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_FiberHistograms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HallTable(benchmark::State& state) {
  hall::Options opts;
  opts.exec = mode(state);
  const quiver::Folded Q(a3_fold());
  const auto a = Q.dim({1, 1, 1}), b = Q.dim({1, 1, 1});
  for (auto _ : state) {
    hall::Workbench wb(rep::make_context(Q, 2, 1), opts);
    benchmark::DoNotOptimize(wb.hall(a, b).counts.size());
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_HallTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
