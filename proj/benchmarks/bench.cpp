#include <benchmark/benchmark.h>

#include "groupkit/harness.hpp"

using namespace gk;

static void BM_StabilizerChain(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto gens = symmetric(n).generators();
  for (auto _ : state) {
    Group g = Group::generated(n, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChain)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

static void BM_ElementEnumeration(benchmark::State& state) {
  auto gens = symmetric(6).generators();
  for (auto _ : state) {
    Group g = Group::generated(6, gens);
    benchmark::DoNotOptimize(g.elements().size());
  }
}
BENCHMARK(BM_ElementEnumeration);

static void BM_NormalLattice(benchmark::State& state) {
  Group g = direct_product(cyclic(2), symmetric(4));
  for (auto _ : state) {
    auto lat = normal_subgroups(g);
    benchmark::DoNotOptimize(lat.nodes.size());
  }
}
BENCHMARK(BM_NormalLattice);

static void BM_ChiefSeries(benchmark::State& state) {
  Group g = direct_product(symmetric(4), cyclic(6));
  auto lat = normal_subgroups(g);
  for (auto _ : state) {
    auto series = chief_series(lat);
    benchmark::DoNotOptimize(series.size());
  }
}
BENCHMARK(BM_ChiefSeries);

static void BM_PropertyCheck(benchmark::State& state) {
  Group g = symmetric(4);
  auto lat = normal_subgroups(g);
  Group h = Group::subgroup_of(g, {parse_cycles("(1,2,3,4)", 4)});
  for (auto _ : state) {
    auto v = satisfies_l_pi(lat, h);
    benchmark::DoNotOptimize(v.holds);
  }
}
BENCHMARK(BM_PropertyCheck);

static void BM_SylowSubgroup(benchmark::State& state) {
  Group g = symmetric(6);
  for (auto _ : state) {
    Group p = sylow_subgroup(g, 2);
    benchmark::DoNotOptimize(p.order());
  }
}
BENCHMARK(BM_SylowSubgroup);

static void BM_TheoremSweepS4(benchmark::State& state) {
  std::vector<NamedGroup> corpus = {{"S4", symmetric(4)}};
  for (auto _ : state) {
    auto rep = verify_theorem_a(corpus);
    benchmark::DoNotOptimize(rep.cases.size());
  }
}
BENCHMARK(BM_TheoremSweepS4);

BENCHMARK_MAIN();
