#include <benchmark/benchmark.h>

#include "regset/fieldcodes.hpp"
#include "regset/regular.hpp"
#include "regset/spectral.hpp"

using namespace regset;

static void BM_SearchConnectionSet(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FiniteGroup g = FiniteGroup::dihedral(n);
  SubgroupInfo h = generated_subgroup(g, ElementSet(2 * n, {2}));
  for (auto _ : state) {
    auto s = search_connection_set(g, h, 2);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SearchConnectionSet)->Arg(6)->Arg(8)->Arg(10);

static void BM_ConstructNormalEven(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FiniteGroup g = FiniteGroup::cyclic(n);
  SubgroupInfo h = generated_subgroup(g, ElementSet(n, {4}));
  for (auto _ : state) {
    ElementSet s = construct_normal_even(g, h, 2);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ConstructNormalEven)->Arg(16)->Arg(32)->Arg(64);

static void BM_VerifyRegularSet(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto code = hypercube_regular_set(n, 1);
  CayleyGraph graph = hypercube_graph(n);
  ElementSet w = code_as_element_set(*code);
  for (auto _ : state) {
    auto cert = verify_regular_set(graph, w, 0, 1);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_VerifyRegularSet)->Arg(7);

static void BM_NullspaceOverF2(benchmark::State& state) {
  int t = static_cast<int>(state.range(0));
  FpMatrix m = build_check_matrix({2, t, 1, (1 << t) - 1});
  for (auto _ : state) {
    RankNullspace rn = fp_rank_nullspace(m);
    benchmark::DoNotOptimize(rn);
  }
}
BENCHMARK(BM_NullspaceOverF2)->Arg(4)->Arg(6)->Arg(8);

static void BM_AdjacencyCharPoly(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CayleyGraph graph = hypercube_graph(n);
  for (auto _ : state) {
    IntPoly p = adjacency_char_poly(graph);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_AdjacencyCharPoly)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
