#include <benchmark/benchmark.h>

#include <random>

#include "wmax/canonical.hpp"
#include "wmax/enumerate.hpp"
#include "wmax/families.hpp"
#include "wmax/graph.hpp"
#include "wmax/rewrites.hpp"
#include "wmax/search.hpp"

namespace {

wmax::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  wmax::Graph g(n);
  for (int v = 1; v < n; ++v)
    g.add_edge(v, static_cast<int>(rng() % v));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng) < p) g.add_edge(u, v);
  return g;
}

void BM_WienerCycle(benchmark::State& state) {
  const wmax::Graph g = wmax::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wmax::wiener(g));
}
BENCHMARK(BM_WienerCycle)->Arg(16)->Arg(32)->Arg(62);

void BM_BlockDecomposition(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const wmax::Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(wmax::block_decomposition(g));
}
BENCHMARK(BM_BlockDecomposition)->Arg(16)->Arg(32);

void BM_CanonicalCode(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<wmax::Graph> graphs;
  for (int i = 0; i < 64; ++i)
    graphs.push_back(random_graph(rng, static_cast<int>(state.range(0)), 0.4));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmax::canonical_code(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(9)->Arg(10);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    wmax::for_each_connected(n, [&](const wmax::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HillClimb(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<wmax::Graph> graphs;
  for (int i = 0; i < 32; ++i)
    graphs.push_back(random_graph(rng, static_cast<int>(state.range(0)), 0.2));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmax::hill_climb(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_HillClimb)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_VerifyMain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wmax::verify_main(n));
}
BENCHMARK(BM_VerifyMain)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
