#include <benchmark/benchmark.h>

#include <random>

#include "shadowlab/canonical.hpp"
#include "shadowlab/clique_degree.hpp"
#include "shadowlab/edge_index.hpp"
#include "shadowlab/kk_order.hpp"
#include "shadowlab/search.hpp"
#include "shadowlab/shifting.hpp"

using namespace shadowlab;

namespace {

UniformHypergraph random_graph(int n, int r, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Mask> edges;
  for_each_subset(prefix_mask(n), r, [&](Mask e) {
    if (coin(rng)) edges.push_back(e);
  });
  return UniformHypergraph::from_masks(n, r, std::move(edges));
}

void BM_Shadow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniformHypergraph h = random_graph(n, 4, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(shadow(h.edges(), 2));
  state.SetLabel(std::to_string(h.edge_count()) + " 4-sets");
}
BENCHMARK(BM_Shadow)->Arg(10)->Arg(16)->Arg(24);

void BM_KkMinShadow(benchmark::State& state) {
  std::uint64_t m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kk_min_shadow(m, 5, 2));
    m = m % 100000 + 7919;
  }
}
BENCHMARK(BM_KkMinShadow);

void BM_CliqueDegrees(benchmark::State& state) {
  const UniformHypergraph h = random_graph(static_cast<int>(state.range(0)), 2, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(clique_degrees(h, 4));
}
BENCHMARK(BM_CliqueDegrees)->Arg(12)->Arg(20)->Arg(32);

void BM_Shift(benchmark::State& state) {
  const UniformHypergraph h = random_graph(20, 3, 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(shift(h, 1, 20));
}
BENCHMARK(BM_Shift);

void BM_CanonicalString(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeIndex index(n, 2);
  const EdgeString s = index.encode(random_graph(n, 2, 0.4, 4));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_string(s, index));
}
BENCHMARK(BM_CanonicalString)->Arg(7)->Arg(9)->Arg(11);

void BM_MinEdges(benchmark::State& state) {
  const Parameters params{static_cast<int>(state.range(0)), 2, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(min_edges(params).optimum);
}
BENCHMARK(BM_MinEdges)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_EnumerateExtremal(benchmark::State& state) {
  const Parameters params{9, 3, 4, 2};
  SearchOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extremal(params, options).witnesses.size());
}
BENCHMARK(BM_EnumerateExtremal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
