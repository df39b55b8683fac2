#include <random>

#include <benchmark/benchmark.h>

#include "visipoly/visipoly.hpp"

using namespace visipoly;

namespace {

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

void BM_BruteforceComplete(benchmark::State &state) {
  const auto g = build_class(ClassSpec::complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_bruteforce(g));
}
BENCHMARK(BM_BruteforceComplete)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

void BM_PrunedComplete(benchmark::State &state) {
  const auto g = build_class(ClassSpec::complete(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_pruned(g));
}
BENCHMARK(BM_PrunedComplete)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

void BM_PrunedCycle(benchmark::State &state) {
  const auto g = build_class(ClassSpec::cycle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_pruned(g));
}
BENCHMARK(BM_PrunedCycle)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_PrunedRandom(benchmark::State &state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_pruned(g));
}
BENCHMARK(BM_PrunedRandom)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_BruteforceRandom(benchmark::State &state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_bruteforce(g));
}
BENCHMARK(BM_BruteforceRandom)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_MvTestBitParallel(benchmark::State &state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  const VisibilityOracle oracle(g);
  std::mt19937_64 rng(1);
  const VertexMask full = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle.is_mutual_visibility_set(rng() & full));
}
BENCHMARK(BM_MvTestBitParallel)->Arg(16)->Arg(32)->Arg(64);

void BM_MvTestLayered(benchmark::State &state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  const auto d = all_pairs_distances(g);
  std::mt19937_64 rng(1);
  const VertexMask full = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
  for (auto _ : state) {
    const auto x = from_mask(rng() & full);
    benchmark::DoNotOptimize(is_mutual_visibility_set(g, d, x));
  }
}
BENCHMARK(BM_MvTestLayered)->Arg(16)->Arg(32)->Arg(64);

void BM_JoinFormula(benchmark::State &state) {
  const auto g = paw_graph();
  const auto h = build_class(ClassSpec::cycle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(poly_join(g, h));
}
BENCHMARK(BM_JoinFormula)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
