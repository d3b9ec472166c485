#include <benchmark/benchmark.h>

#include "rrlat/a2.hpp"
#include "rrlat/extremal.hpp"
#include "rrlat/graph.hpp"
#include "rrlat/lattice.hpp"
#include "rrlat/rank.hpp"

namespace {

using namespace rrlat;

Multigraph complete_graph(std::size_t v, std::int64_t mult) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) edges.push_back({i, j, mult});
  return Multigraph(v, edges);
}

void BM_EnumerateBox(benchmark::State& state) {
  auto L = laplacian_lattice(complete_graph(4, 2));
  const long long r = state.range(0);
  LatticeBox box{Divisor{-r, -r, -r, -r}, Divisor{r, r, r, r}};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points(L, box));
}
BENCHMARK(BM_EnumerateBox)->Arg(4)->Arg(8)->Arg(16);

void BM_ExtremalGraphical(benchmark::State& state) {
  auto g = complete_graph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_set_graphical(g, false));
}
BENCHMARK(BM_ExtremalGraphical)->DenseRange(3, 6);

void BM_ExtremalGeneralA2(benchmark::State& state) {
  Rng rng(11);
  auto L = random_a2_lattice(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_set_general(L));
}
BENCHMARK(BM_ExtremalGeneralA2)->Arg(6)->Arg(12);

void BM_RankBruteforce(benchmark::State& state) {
  auto L = laplacian_lattice(complete_graph(4, 1));
  Divisor d{state.range(0), 0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(rank_bruteforce(L, d, 64));
}
BENCHMARK(BM_RankBruteforce)->Arg(2)->Arg(4)->Arg(6);

void BM_RankExtremal(benchmark::State& state) {
  auto g = complete_graph(4, 1);
  auto L = laplacian_lattice(g);
  auto ext = extremal_set_graphical(g, false);
  Divisor d{state.range(0), 0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(rank_extremal(L, d, ext));
}
BENCHMARK(BM_RankExtremal)->Arg(2)->Arg(4)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
