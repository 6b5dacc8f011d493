#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "recolle/ladder.hpp"
#include "recolle/oracle.hpp"
#include "recolle/search.hpp"

using namespace recolle;

namespace {

const char* const kNames[] = {"ex43", "ex53", "ex54", "jh7", "qh3"};

void BM_BuildAlgebra(benchmark::State& st) {
  auto q = fixtures::quiver(kNames[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(build_algebra(q));
  st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_BuildAlgebra)->DenseRange(0, 4);

void BM_SimpleResolutions(benchmark::State& st) {
  auto a = fixtures::algebra(kNames[st.range(0)]);
  size_t d = default_depth(a);
  for (auto _ : st)
    for (size_t v = 0; v < a->num_vertices(); ++v) benchmark::DoNotOptimize(min_resolution(simple_module(a, v), d));
  st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_SimpleResolutions)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_HomDim(benchmark::State& st) {
  auto a = fixtures::algebra("ex54");
  auto x = two_term(a, 1, 0, fixtures::elem(a, "alpha"));
  auto y = direct_sum(x, stalk(a, {0, 1}));
  for (auto _ : st) benchmark::DoNotOptimize(hom_dim(y, y, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_HomDim)->DenseRange(-1, 1);

void BM_HomBruteforce(benchmark::State& st) {
  auto a = fixtures::algebra("ex54", fixtures::F2());
  auto x = two_term(a, 1, 0, fixtures::elem(a, "alpha"));
  for (auto _ : st) benchmark::DoNotOptimize(hom_bruteforce(x, x, 0));
}
BENCHMARK(BM_HomBruteforce);

void BM_TorVsBar(benchmark::State& st) {
  auto a = fixtures::algebra("jh7", fixtures::F2());
  auto m = ideal_quotient_module(a, {0});
  auto n = ideal_quotient_module(opposite(a), {0});
  size_t i = static_cast<size_t>(st.range(1));
  for (auto _ : st) {
    if (st.range(0) == 0)
      benchmark::DoNotOptimize(tor_dim(m, n, i, default_depth(a)));
    else
      benchmark::DoNotOptimize(bar_tor(m, n, i));
  }
  st.SetLabel(st.range(0) == 0 ? "resolution" : "bar");
}
BENCHMARK(BM_TorVsBar)->ArgsProduct({{0, 1}, {1, 2, 3, 4}})->Unit(benchmark::kMillisecond);

void BM_Ladder(benchmark::State& st) {
  auto a = fixtures::algebra("ex43");
  size_t d = default_depth(a);
  auto rec = build_recollement(a, {0}, d);
  for (auto _ : st) benchmark::DoNotOptimize(ladder_heights(rec, static_cast<size_t>(st.range(0)), d));
}
BENCHMARK(BM_Ladder)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ExceptionalSearch(benchmark::State& st) {
  auto a = fixtures::algebra(kNames[st.range(0)], fixtures::F2());
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_exceptional(a, 2, 2));
  st.SetLabel(kNames[st.range(0)]);
}
BENCHMARK(BM_ExceptionalSearch)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StratificationTrees(benchmark::State& st) {
  auto a = fixtures::algebra("jh7");
  for (auto _ : st) benchmark::DoNotOptimize(stratification_trees(a, 0));
}
BENCHMARK(BM_StratificationTrees)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
