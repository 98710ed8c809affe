#include <benchmark/benchmark.h>

#include "rdom/engine.hpp"
#include "rdom/generators.hpp"
#include "rdom/oracle.hpp"

using namespace rdom;

namespace {

// Rejection sampling stops finding k=1 graphs past about 22 vertices; above that,
// take the largest family graph that fits.
Graph random_k1(int n) {
  if (n <= 22) return generate({family::RandomMinDeg2{n, 0.07, 1}, 99});
  Graph best = generate({family::Cycle{17}, 0});
  for (auto& e : family_suite(1, n, 99))
    if (e.graph.n() > best.n()) best = std::move(e.graph);
  return best;
}

void BM_GammaExactCycle(benchmark::State& st) {
  Graph g = generate({family::Cycle{static_cast<int>(st.range(0))}, 0});
  for (auto _ : st) benchmark::DoNotOptimize(gamma_r_exact(g).value);
}
BENCHMARK(BM_GammaExactCycle)->DenseRange(14, 26, 4);

void BM_GammaExactRandom(benchmark::State& st) {
  Graph g = random_k1(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gamma_r_exact(g).value);
}
BENCHMARK(BM_GammaExactRandom)->DenseRange(15, 23, 4);

void BM_DifferentialExact(benchmark::State& st) {
  Graph g = random_k1(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(differential_exact(g).value);
}
BENCHMARK(BM_DifferentialExact)->DenseRange(15, 23, 4);

void BM_EngineRandom(benchmark::State& st) {
  Graph g = random_k1(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(construct_bound_triple(g, 1).witness_weight);
}
BENCHMARK(BM_EngineRandom)->Arg(18)->Arg(22)->Arg(30);

void BM_EngineStar(benchmark::State& st) {
  Graph g = generate({family::Brs{{{8, 2}}, {8, 8, 8}}, 0});
  for (auto _ : st) benchmark::DoNotOptimize(construct_bound_triple(g, 1).witness_weight);
}
BENCHMARK(BM_EngineStar);

void BM_InducedCycles(benchmark::State& st) {
  Graph g = random_k1(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(induced_cycles_up_to(g, 8).size());
}
BENCHMARK(BM_InducedCycles)->Arg(20)->Arg(40);

void BM_CycleEnumeration(benchmark::State& st) {
  Graph g = random_k1(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    std::size_t count = 0;
    for_each_cycle(g, g.all_mask(), g.n(), [&](const VertexCycle&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CycleEnumeration)->Arg(20)->Arg(30);

}  // namespace
BENCHMARK_MAIN();
