#include <benchmark/benchmark.h>

#include "phasepotts/dynamics.hpp"
#include "phasepotts/graph.hpp"
#include "phasepotts/hamiltonian.hpp"
#include "phasepotts/oracle.hpp"
#include "phasepotts/scheduler.hpp"

namespace {

using namespace phasepotts;

void BM_Step(benchmark::State& st) {
  const auto g = kings_graph(static_cast<std::size_t>(st.range(0)));
  const auto gate = CouplingGate::all_on(g);
  const auto shil = ShilConfig::uniform(g.node_count(), kShil1Phase);
  const DynamicsParams p;
  NodeStreams streams(1, g.node_count());
  auto s = random_init(g.node_count(), streams);
  for (auto _ : st) {
    s = step(s, g, gate, shil, p, streams);
    benchmark::DoNotOptimize(s.phases.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.node_count()));
}
BENCHMARK(BM_Step)->Arg(7)->Arg(20)->Arg(46);

void BM_LyapunovEnergy(benchmark::State& st) {
  const auto g = kings_graph(static_cast<std::size_t>(st.range(0)));
  const auto gate = CouplingGate::all_on(g);
  const auto shil = ShilConfig::uniform(g.node_count(), kShil1Phase);
  NodeStreams streams(2, g.node_count());
  const auto s = random_init(g.node_count(), streams);
  for (auto _ : st) benchmark::DoNotOptimize(lyapunov_energy(g, s.phases, gate, shil, {}));
}
BENCHMARK(BM_LyapunovEnergy)->Arg(20);

void BM_Solve4Coloring(benchmark::State& st) {
  const auto g = kings_graph(static_cast<std::size_t>(st.range(0)));
  SolveOptions opts;
  opts.baseline = cut_baseline(g);
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(solve_4coloring(g, {}, {}, seed++, opts));
}
BENCHMARK(BM_Solve4Coloring)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ExactColoringKings(benchmark::State& st) {
  const auto g = kings_graph(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(exact_coloring(g, 4));
}
BENCHMARK(BM_ExactColoringKings)->Arg(7)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
