#include <benchmark/benchmark.h>

#include "klab/colength.hpp"
#include "klab/families.hpp"
#include "klab/groebner.hpp"
#include "klab/invariants.hpp"
#include "klab/koszul.hpp"

namespace {

using namespace klab;

void BM_BuchbergerF1(benchmark::State& state) {
  auto f = instantiate_family("F1", static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(f.ideal).elements().size());
}
BENCHMARK(BM_BuchbergerF1)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ColengthF4(benchmark::State& state) {
  auto f = instantiate_family("F4", static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_colength(f.ideal, f.ring, kFamilyLengthCap).value);
}
BENCHMARK(BM_ColengthF4)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_KoszulF3(benchmark::State& state) {
  auto f = instantiate_family("F3", static_cast<unsigned>(state.range(0)));
  const auto& r = f.target("R").module;
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_cohomology_profile(f.ideal, r, kFamilyLengthCap).cohomology.size());
  }
}
BENCHMARK(BM_KoszulF3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_KoszulF1Module(benchmark::State& state) {
  auto f = instantiate_family("F1", static_cast<unsigned>(state.range(0)));
  const auto& m = f.target("M").module;
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_cohomology_profile(f.ideal, m, kFamilyLengthCap).cohomology.size());
  }
}
BENCHMARK(BM_KoszulF1Module)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_MultiplicityF4(benchmark::State& state) {
  auto f = instantiate_family("F4", static_cast<unsigned>(state.range(0)));
  const auto& r = f.target("R").module;
  MultiplicityOptions o;
  o.cap = kFamilyLengthCap;
  for (auto _ : state) benchmark::DoNotOptimize(hs_multiplicity(f.ideal, r, o).value);
}
BENCHMARK(BM_MultiplicityF4)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
