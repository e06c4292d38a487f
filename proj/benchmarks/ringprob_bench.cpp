#include <benchmark/benchmark.h>

#include "ringprob/catalog.hpp"
#include "ringprob/probability.hpp"
#include "ringprob/subring.hpp"

using namespace ringprob;

namespace {

const char* const kSpecs[] = {"nc4a", "ut2:2", "nc4a*zn:2", "m2:2", "nc4a*nc4a"};

RingPtr ring_at(const benchmark::State& state) { return share(builtin_from_spec(kSpecs[state.range(0)])); }

void BM_PrNaive(benchmark::State& state) {
  const auto r = ring_at(state);
  const auto w = Subring::whole(r);
  for (auto _ : state)
    for (Index x = 0; x < r->order(); ++x) benchmark::DoNotOptimize(pr_r_naive(w, w, r->element(x)));
  state.SetLabel(kSpecs[state.range(0)]);
}

void BM_PrFormula(benchmark::State& state) {
  const auto r = ring_at(state);
  const auto w = Subring::whole(r);
  for (auto _ : state) {
    CentralizerCache cache(w);
    for (Index x = 0; x < r->order(); ++x) benchmark::DoNotOptimize(pr_r_formula(w, cache, x));
  }
  state.SetLabel(kSpecs[state.range(0)]);
}

void BM_EnumerateSubrings(benchmark::State& state) {
  const auto r = ring_at(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subrings(r));
  state.SetLabel(kSpecs[state.range(0)]);
}

void BM_GenerateRings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_rings(static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_PrNaive)->DenseRange(0, 4);
BENCHMARK(BM_PrFormula)->DenseRange(0, 4);
BENCHMARK(BM_EnumerateSubrings)->DenseRange(0, 4);
BENCHMARK(BM_GenerateRings)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
