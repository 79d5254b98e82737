#ifndef BSNQ_TESTS_TEST_UTIL_HPP
#define BSNQ_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"

namespace bsnq::testutil {

// Independent oracle: expand a word into single letters and reduce with a
// stack, never relying on FreeWord's own merging.
inline FreeWord naive_reduce(const std::vector<std::pair<int, long>>& letters) {
  std::vector<std::pair<int, int>> stack;  // (gen, +-1)
  for (auto [gen, exp] : letters) {
    int step = exp < 0 ? -1 : 1;
    for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) {
      if (!stack.empty() && stack.back().first == gen && stack.back().second == -step)
        stack.pop_back();
      else
        stack.emplace_back(gen, step);
    }
  }
  FreeWord w;
  for (auto [gen, step] : stack) w.append(gen, step);
  return w;
}

inline FreeWord random_word(std::mt19937& rng, int alphabet, int max_syllables,
                            int max_exp = 4) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, alphabet - 1);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  FreeWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.append(gen(rng), e);
  }
  return w;
}

// The nine groups the acceptance suite runs everything on.
inline const std::vector<std::pair<int, int>>& acceptance_fixtures() {
  static const std::vector<std::pair<int, int>> fx = {
      {2, 3}, {3, 5}, {6, 9}, {6, 10}, {2, 2}, {2, -2}, {2, 4}, {6, 12}, {4, 6}};
  return fx;
}

}  // namespace bsnq::testutil

#include "bsnq/britton.hpp"

namespace bsnq::testutil {

// A random word equal to w in BS(m,n): splice a conjugate of the relator or
// its inverse into a random position.
inline FreeWord splice_relator(std::mt19937& rng, const BSParams& p, const FreeWord& w) {
  std::uniform_int_distribution<int> flip(0, 1);
  FreeWord rel = bs_relator(p);
  if (flip(rng)) rel = rel.inverse();
  FreeWord conj = conjugate_word(rel, random_word(rng, 2, 3));
  auto syls = w.syllables();
  std::uniform_int_distribution<std::size_t> cut(0, syls.size());
  std::size_t at = cut(rng);
  FreeWord out;
  for (std::size_t i = 0; i < at; ++i) out.append(syls[i].gen, syls[i].exp);
  out.append(conj);
  for (std::size_t i = at; i < syls.size(); ++i) out.append(syls[i].gen, syls[i].exp);
  return out;
}

// A random pinch-free normal form with at least one t-letter.
inline BrittonNormalForm random_pinch_free(std::mt19937& rng, const BSParams& p) {
  std::uniform_int_distribution<int> head(-4, 4);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> eps(0, 1);
  BrittonNormalForm nf;
  nf.head = head(rng);
  int k = len(rng);
  for (int i = 0; i < k; ++i) {
    int e = eps(rng) ? 1 : -1;
    Int bound = e < 0 ? p.m : abs(p.n);
    std::uniform_int_distribution<long> res(0, bound.get_si() - 1);
    Int r = res(rng);
    if (!nf.tail.empty() && nf.tail.back().epsilon == -e && nf.tail.back().residue == 0) {
      Int prev_bound = nf.tail.back().epsilon < 0 ? p.m : abs(p.n);
      if (prev_bound > 1)
        nf.tail.back().residue = 1;
      else
        e = nf.tail.back().epsilon;
    }
    nf.tail.push_back({e, r});
  }
  return nf;
}

}  // namespace bsnq::testutil

#endif
