#include <benchmark/benchmark.h>

#include "bsnq/free_lie.hpp"

using namespace bsnq;

namespace {

void BM_HallBasis(benchmark::State& state) {
  int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FreeLie lie;  // fresh arena each round
    benchmark::DoNotOptimize(lie.hall_basis(c));
  }
}
BENCHMARK(BM_HallBasis)->DenseRange(6, 12, 2);

void BM_BracketStraightening(benchmark::State& state) {
  int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FreeLie lie;
    LieElement acc = lie.y();
    for (int i = 1; i < c; ++i) acc = lie.bracket(lie.x(), acc);  // left-normed tower
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BracketStraightening)->DenseRange(4, 9);

}  // namespace

BENCHMARK_MAIN();
