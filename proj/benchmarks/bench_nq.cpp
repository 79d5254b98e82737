#include <benchmark/benchmark.h>

#include "bsnq/nq.hpp"
#include "bsnq/presentations.hpp"

using namespace bsnq;

namespace {

void BM_FreeGroupNq(benchmark::State& state) {
  auto pres = free_presentation({"x", "y"});
  int cls = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_quotient(pres, cls));
  state.SetComplexityN(cls);
}
BENCHMARK(BM_FreeGroupNq)->DenseRange(2, 6)->Complexity()->Unit(benchmark::kMillisecond);

void BM_BsNq(benchmark::State& state) {
  auto pres = bs_presentation(bs_params(6, 10));
  int cls = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_quotient(pres, cls));
}
BENCHMARK(BM_BsNq)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
