#include <benchmark/benchmark.h>

#include <random>

#include "bsnq/britton.hpp"
#include "bsnq/presentations.hpp"

using namespace bsnq;

namespace {

FreeWord random_word(std::mt19937& rng, int syllables) {
  std::uniform_int_distribution<int> gen(0, 1), exp(-4, 4);
  FreeWord w;
  for (int i = 0; i < syllables; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.append(gen(rng), e);
  }
  return w;
}

void BM_BrittonReduce(benchmark::State& state) {
  BSParams p = bs_params(6, 9);
  std::mt19937 rng(1);
  std::vector<FreeWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(britton_reduce(p, words[i++ % words.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BrittonReduce)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_WordsEqual(benchmark::State& state) {
  BSParams p = bs_params(2, 3);
  std::mt19937 rng(2);
  FreeWord u = random_word(rng, 64);
  FreeWord v = u * bs_relator(p);
  for (auto _ : state) benchmark::DoNotOptimize(words_equal(p, u, v));
}
BENCHMARK(BM_WordsEqual);

}  // namespace

BENCHMARK_MAIN();
