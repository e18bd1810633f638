#include <benchmark/benchmark.h>

#include "tfp/ensemble.hpp"
#include "tfp/extension.hpp"
#include "tfp/open_sampler.hpp"
#include "tfp/oracle/fixtures.hpp"
#include "tfp/process.hpp"

using namespace tfp;

namespace {

// Full process runs; items are edges added.
void BM_ProcessToCompletion(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto sampler = state.range(1) ? SamplerKind::lazy : SamplerKind::ranked;
  std::uint64_t seed = 1, edges = 0;
  for (auto _ : state) {
    ProcessState s(n, seed++, sampler);
    s.record_history(false);
    run_to_completion(s, SnapshotSchedule::none(), nullptr);
    edges += s.steps();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(edges));
}
BENCHMARK(BM_ProcessToCompletion)->ArgsProduct({{256, 1024, 4096}, {0, 1}})->Unit(benchmark::kMillisecond);

// add_edge alone, replaying a recorded edge sequence.
void BM_AddEdge(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  ProcessState ref(n, 7);
  run_to_completion(ref, SnapshotSchedule::none(), nullptr);
  const auto edges = ref.store().edges();
  for (auto _ : state) {
    PairStore s(n);
    for (PairKey e : edges) s.add_edge(e);
    benchmark::DoNotOptimize(s.open_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * edges.size()));
}
BENCHMARK(BM_AddEdge)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

PairStore store_at(Vertex n, double t) {
  ProcessState s(n, 3);
  const auto steps = static_cast<std::uint64_t>(t * std::pow(n, 1.5));
  while (!s.terminated() && s.steps() < steps) s.step();
  return PairStore(s.store());
}

void BM_RankedSelect(benchmark::State& state) {
  const PairStore s = store_at(static_cast<Vertex>(state.range(0)), 0.5);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.select_open(rng.below(s.open_count())));
}
BENCHMARK(BM_RankedSelect)->Arg(1024)->Arg(4096);

void BM_LazySample(benchmark::State& state) {
  const PairStore s = store_at(static_cast<Vertex>(state.range(0)), 0.5);
  LazyOpenSampler sampler(s);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_LazySample)->Arg(1024)->Arg(4096);

void BM_GlobalStatsExact(benchmark::State& state) {
  const PairStore s = store_at(static_cast<Vertex>(state.range(0)), 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(global_stats(s, StatsMode::exact_mode()));
}
BENCHMARK(BM_GlobalStatsExact)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_GlobalStatsSampled(benchmark::State& state) {
  const PairStore s = store_at(4096, 0.6);
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(global_stats(s, StatsMode::sampled(state.range(0)), &rng));
}
BENCHMARK(BM_GlobalStatsSampled)->Arg(1024)->Arg(8192);

void BM_CountEmbeddings(benchmark::State& state) {
  const PairStore s = store_at(512, 0.5);
  const ExtensionPattern p = parse_pattern("vertices=5; base=[0,1]; edges=[(0,2),(3,4)]; opens=[(1,2),(2,3),(1,4)]");
  Rng rng(3);
  for (auto _ : state) {
    const auto phi = oracle::random_injection(rng, s.n(), 2);
    benchmark::DoNotOptimize(count_embeddings(s, p, phi));
  }
}
BENCHMARK(BM_CountEmbeddings)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
