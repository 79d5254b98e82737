#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsnq/britton.hpp"
#include "bsnq/presentations.hpp"
#include "test_util.hpp"

using namespace bsnq;
using namespace bsnq::testutil;

namespace {

// Oracle: the unique normalized pair among the four isomorphic variants.
std::pair<Int, Int> normalized_by_search(const Int& m, const Int& n) {
  std::vector<std::pair<Int, Int>> orbit = {{m, n}, {n, m}, {-m, -n}, {-n, -m}};
  std::vector<std::pair<Int, Int>> hits;
  for (auto& [a, b] : orbit)
    if (a > 0 && abs(a) <= abs(b)) hits.emplace_back(a, b);
  REQUIRE(!hits.empty());
  for (const auto& h : hits) CHECK(h == hits.front());
  return hits.front();
}

}  // namespace

TEST_CASE("normalize_bs on the worked examples") {
  auto p1 = bs_params(2, 3);
  CHECK(p1.m == 2);
  CHECK(p1.n == 3);
  CHECK(p1.d == 1);
  CHECK(p1.m1 == 2);
  CHECK(p1.n1 == 3);
  CHECK(p1.delta == 1);

  auto p2 = bs_params(-3, 2);
  CHECK(p2.m == 2);
  CHECK(p2.n == -3);
  CHECK(p2.d == 1);
  CHECK(p2.delta == -5);

  auto p3 = bs_params(6, 9);
  CHECK(p3.d == 3);
  CHECK(p3.m1 == 2);
  CHECK(p3.n1 == 3);
  CHECK(p3.delta == 3);
}

TEST_CASE("normalize_bs rejects zero") {
  CHECK_THROWS_AS(normalize_bs(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(normalize_bs(3, 0), std::invalid_argument);
}

TEST_CASE("normalize_bs matches the exhaustive-orbit oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(-12, 12);
  for (int i = 0; i < 500; ++i) {
    int m = val(rng), n = val(rng);
    if (m == 0 || n == 0) continue;
    auto norm = normalize_bs(m, n);
    auto expect = normalized_by_search(m, n);
    CHECK(norm.params.m == expect.first);
    CHECK(norm.params.n == expect.second);
    CHECK(norm.params.d == gcd(norm.params.m, norm.params.n));
    CHECK(norm.params.delta == norm.params.n - norm.params.m);
    // idempotent on its own output
    auto again = normalize_bs(norm.params.m, norm.params.n);
    CHECK(again.params == norm.params);
    CHECK(again.moves.empty());
    // invariant under pre-applying each isomorphism move
    CHECK(normalize_bs(n, m).params == norm.params);
    CHECK(normalize_bs(-m, -n).params == norm.params);
  }
}

TEST_CASE("bs_relator worked examples") {
  const auto& names = bs_generator_names();
  CHECK(format_word(bs_relator(bs_params(2, 3)), names) == "a t^-1 a^-2 t a^2");
  CHECK(format_word(bs_relator(bs_params(2, 2)), names) == "t^-1 a^-2 t a^2");
  CHECK(format_word(bs_relator(bs_params(2, -2)), names) == "a^-4 t^-1 a^-2 t a^2");
}

TEST_CASE("the relator reduces to the identity in its own group") {
  for (auto [m, n] : acceptance_fixtures()) {
    BSParams p = bs_params(m, n);
    CHECK(is_identity(p, bs_relator(p)));
    // and it is equivalent to t^-1 a^m t = a^n
    FreeWord lhs;
    lhs.append(kGenT, -1);
    lhs.append(kGenA, p.m);
    lhs.append(kGenT, 1);
    CHECK(words_equal(p, lhs, FreeWord::generator(kGenA, p.n)));
  }
}

TEST_CASE("presentation constructors") {
  auto zzm = zzm_presentation(6);
  CHECK(zzm.relators.size() == 1);
  CHECK(zzm.relators[0] == FreeWord::generator(kGenA, 6));
  CHECK_THROWS_AS(zzm_presentation(1), std::invalid_argument);
  auto f2 = free_presentation({"x", "y"});
  CHECK(f2.relators.empty());
  CHECK(f2.generator_count() == 2);
}
