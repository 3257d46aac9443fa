#include <benchmark/benchmark.h>

#include <map>

#include "contagion/bounds.hpp"
#include "contagion/cascade.hpp"
#include "contagion/exact.hpp"
#include "contagion/generators.hpp"
#include "contagion/greedy.hpp"
#include "contagion/random_perm.hpp"
#include "contagion/warmup_k2.hpp"

using namespace contagion;

namespace {

// G(n, p) with average degree 20, cached per n.
const Graph& sparse_graph(std::uint32_t n) {
  static std::map<std::uint32_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_gnp(n, 20.0 / (n - 1), 1)).first;
  return it->second;
}

void set_edges_processed(benchmark::State& state, const Graph& g) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.num_edges()));
  state.counters["m"] = static_cast<double>(g.num_edges());
}

}  // namespace

static void BM_Greedy(benchmark::State& state) {
  const auto& g = sparse_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_contagious(g, ThresholdConfig(2)));
  set_edges_processed(state, g);
}
BENCHMARK(BM_Greedy)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  const auto& g = sparse_graph(static_cast<std::uint32_t>(state.range(0)));
  const auto seeds = greedy_contagious(g, ThresholdConfig(2)).set;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(g, ThresholdConfig(2), seeds));
  set_edges_processed(state, g);
}
BENCHMARK(BM_Simulate)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

static void BM_SampleL(benchmark::State& state) {
  const auto& g = sparse_graph(static_cast<std::uint32_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_L(g, ThresholdConfig(2), seed++));
  set_edges_processed(state, g);
}
BENCHMARK(BM_SampleL)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

static void BM_Weight(benchmark::State& state) {
  const auto& g = sparse_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_value(g, ThresholdConfig(3)));
}
BENCHMARK(BM_Weight)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMicrosecond);

static void BM_Degeneracy(benchmark::State& state) {
  const auto& g = sparse_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy(g));
  set_edges_processed(state, g);
}
BENCHMARK(BM_Degeneracy)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

static void BM_IteratedK2(benchmark::State& state) {
  const auto d = static_cast<std::uint32_t>(state.range(0));
  const auto g = gen_random_regular(20000, d, 3);
  WarmupParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterated_random_k2(g, params));
    ++params.seed;
  }
}
BENCHMARK(BM_IteratedK2)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

// Dense instances: the search stops at subsets of size <= floor(w) = 2.
static void BM_SolveDense(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = gen_gnp(n, 0.9, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dense(g, ThresholdConfig(2)));
}
BENCHMARK(BM_SolveDense)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_GenRandomRegular(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_random_regular(20000, static_cast<std::uint32_t>(state.range(0)), seed++));
}
BENCHMARK(BM_GenRandomRegular)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
