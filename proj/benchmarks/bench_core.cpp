#include <benchmark/benchmark.h>

#include "ulrich/classify.hpp"
#include "ulrich/cohomology.hpp"

using namespace ulrich;

namespace {

void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs = RootSystem::build(DynkinType(Series::E, 8));
    benchmark::DoNotOptimize(rs.positive_roots().size());
  }
}
BENCHMARK(BM_BuildE8);

void BM_ToDominant(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::E, 8));
  const Weight mu({-5, 3, -2, 1, -4, 2, -1, 3});
  for (auto _ : state) {
    auto res = to_dominant(rs, mu);
    benchmark::DoNotOptimize(res.length);
  }
}
BENCHMARK(BM_ToDominant);

void BM_SingSet(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::E, 6));
  const Weight omega({0, 0, 0, 0, 1, 3});
  for (auto _ : state) {
    auto s = sing_set(rs, 1, omega);
    benchmark::DoNotOptimize(s.values.size());
  }
}
BENCHMARK(BM_SingSet);

void BM_IsUlrich(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::E, 8));
  const Weight omega({0, 1, 0, 2, 0, 1, 0, 3});
  for (auto _ : state) benchmark::DoNotOptimize(is_ulrich(rs, 4, omega));
}
BENCHMARK(BM_IsUlrich);

void BM_BundleRank(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::E, 7));
  const Weight omega({0, 0, 0, 0, 1, 3, 8});
  for (auto _ : state) {
    BigInt r = bundle_rank(rs, 1, omega);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BundleRank);

void BM_ClassifyF4P4(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::F, 4));
  for (auto _ : state) {
    auto certs = classify(rs, 4, 1);
    benchmark::DoNotOptimize(certs.size());
  }
}
BENCHMARK(BM_ClassifyF4P4);

void BM_ClassifyE6P1(benchmark::State& state) {
  const RootSystem rs = RootSystem::build(DynkinType(Series::E, 6));
  for (auto _ : state) {
    auto certs = classify(rs, 1, 1);
    benchmark::DoNotOptimize(certs.size());
  }
}
BENCHMARK(BM_ClassifyE6P1);

}  // namespace

BENCHMARK_MAIN();
