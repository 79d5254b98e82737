#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bsnq/britton.hpp"
#include "bsnq/classifier.hpp"
#include "bsnq/free_product.hpp"
#include "test_util.hpp"

using namespace bsnq;
using namespace bsnq::testutil;

namespace {

std::set<std::pair<long, long>> pair_set(const std::vector<std::pair<Int, Int>>& v) {
  std::set<std::pair<long, long>> s;
  for (const auto& [a, b] : v) s.emplace(a.get_si(), b.get_si());
  return s;
}

// Brute-force oracle over divisor pairs.
std::set<std::pair<long, long>> coprime_pairs_oracle(long d) {
  std::set<std::pair<long, long>> s;
  for (long mu = 1; mu <= d; ++mu)
    if (d % mu == 0 && gcd(Int(mu), Int(d / mu)) == 1) s.emplace(mu, d / mu);
  return s;
}

}  // namespace

TEST_CASE("residual finiteness criterion") {
  CHECK(is_residually_finite(bs_params(1, 5)));
  CHECK(is_residually_finite(bs_params(2, -2)));
  CHECK_FALSE(is_residually_finite(bs_params(2, 3)));
}

TEST_CASE("residual nilpotence criterion") {
  CHECK_FALSE(is_residually_nilpotent(bs_params(1, 2)));
  CHECK(is_residually_nilpotent(bs_params(1, 3)));
  CHECK(is_residually_nilpotent(bs_params(4, 4)));
  CHECK_FALSE(is_residually_nilpotent(bs_params(6, 6)));
}

TEST_CASE("residually p criterion") {
  CHECK(is_residually_p(bs_params(1, 4), 3));
  CHECK(is_residually_p(bs_params(2, -2), 2));
  CHECK_FALSE(is_residually_p(bs_params(2, 2), 3));
  CHECK(is_residually_p(bs_params(2, 2), 2));
  CHECK_THROWS_AS(is_residually_p(bs_params(2, 2), 4), std::invalid_argument);
}

TEST_CASE("implication chain over the classification grid") {
  std::vector<Int> primes = {2, 3, 5, 7};
  for (int m = 1; m <= 12; ++m)
    for (int an = m; an <= 12; ++an)
      for (int sign : {1, -1}) {
        BSParams p = bs_params(m, sign * an);
        ResidualReport r = classify(p, primes);
        bool some_p = false;
        for (const auto& [q, yes] : r.residually_p) some_p |= yes;
        if (some_p) CHECK(r.residually_nilpotent);
        if (r.residually_nilpotent) CHECK(r.residually_finite);
      }
}

TEST_CASE("coprime_factor_pairs examples and counting") {
  CHECK(pair_set(coprime_factor_pairs(1)) == std::set<std::pair<long, long>>{{1, 1}});
  CHECK(pair_set(coprime_factor_pairs(12)) ==
        std::set<std::pair<long, long>>{{1, 12}, {12, 1}, {3, 4}, {4, 3}});
  CHECK(coprime_factor_pairs(30).size() == 8);
  for (long d = 1; d <= 60; ++d) {
    auto pairs = coprime_factor_pairs(d);
    CHECK(pair_set(pairs) == coprime_pairs_oracle(d));
    CHECK(Int(pairs.size()) == pow(Int(2), omega(Int(d))));
    for (const auto& [mu, nu] : pairs) {
      CHECK(mu * nu == d);
      CHECK(gcd(mu, nu) == 1);
    }
  }
}

TEST_CASE("gamma_omega_generators on the worked examples") {
  // BS(2,3): closure of a alone
  auto f23 = gamma_omega_generators(bs_params(2, 3));
  REQUIRE(f23.constant_words.size() == 1);
  CHECK(f23.constant_words[0] == FreeWord::generator(kGenA));
  CHECK(f23.parametric_templates.empty());
  CHECK(f23.extra_words.empty());

  // BS(3,5): single commutator family
  auto f35 = gamma_omega_generators(bs_params(3, 5));
  CHECK(f35.constant_words.empty());
  CHECK(pair_set(f35.parametric_templates) == std::set<std::pair<long, long>>{{1, 1}});

  // BS(6,9): torsion word a^3 plus both orientations
  auto f69 = gamma_omega_generators(bs_params(6, 9));
  REQUIRE(f69.constant_words.size() == 1);
  CHECK(f69.constant_words[0] == FreeWord::generator(kGenA, 3));
  CHECK(pair_set(f69.parametric_templates) == std::set<std::pair<long, long>>{{1, 3}, {3, 1}});

  // BS(6,10): commutator families only
  auto f610 = gamma_omega_generators(bs_params(6, 10));
  CHECK(f610.constant_words.empty());
  CHECK(pair_set(f610.parametric_templates) == std::set<std::pair<long, long>>{{1, 2}, {2, 1}});

  // BS(2,2): n1 = m1, every prime divides 0
  auto f22 = gamma_omega_generators(bs_params(2, 2));
  CHECK(f22.constant_words.empty());
  CHECK(pair_set(f22.parametric_templates) == std::set<std::pair<long, long>>{{1, 2}, {2, 1}});
}

TEST_CASE("n_omega_generators") {
  auto f46 = n_omega_generators(bs_params(4, 6));
  CHECK(pair_set(f46.parametric_templates) == std::set<std::pair<long, long>>{{2, 1}});
  auto f23 = n_omega_generators(bs_params(2, 3));
  CHECK(pair_set(f23.parametric_templates) == std::set<std::pair<long, long>>{{1, 1}});
  // BS(m,m): a^d is central, every instance reduces to the identity
  BSParams p44 = bs_params(4, 4);
  for (const FreeWord& w : instantiate(n_omega_generators(p44), 3))
    CHECK(is_identity(p44, w));
}

TEST_CASE("np_omega_generators worked examples") {
  auto f46q2 = np_omega_generators(bs_params(4, 6), 2);
  REQUIRE(f46q2.constant_words.size() == 1);
  CHECK(f46q2.constant_words[0] == FreeWord::generator(kGenA, 2));
  CHECK(f46q2.parametric_templates.empty());

  auto f46q3 = np_omega_generators(bs_params(4, 6), 3);
  REQUIRE(f46q3.constant_words.size() == 1);
  CHECK(f46q3.constant_words[0] == FreeWord::generator(kGenA, 1));

  auto f22q2 = np_omega_generators(bs_params(2, 2), 2);
  CHECK(f22q2.constant_words.empty());
  REQUIRE(f22q2.extra_words.size() == 1);
  FreeWord expected;
  expected.append(kGenT, -1);
  expected.append(kGenA, 2);
  expected.append(kGenT, 1);
  expected.append(kGenA, -2);
  CHECK(f22q2.extra_words[0] == expected);
  CHECK(pair_set(f22q2.parametric_templates) == std::set<std::pair<long, long>>{{2, 1}});

  CHECK_THROWS_AS(np_omega_generators(bs_params(2, 2), 6), std::invalid_argument);
}

TEST_CASE("zzm_gamma_omega_generators") {
  CHECK(pair_set(zzm_gamma_omega_generators(6).parametric_templates) ==
        std::set<std::pair<long, long>>{{1, 6}, {6, 1}, {2, 3}, {3, 2}});
  CHECK(pair_set(zzm_gamma_omega_generators(12).parametric_templates) ==
        coprime_pairs_oracle(12));
  CHECK_THROWS_AS(zzm_gamma_omega_generators(1), std::invalid_argument);
  // prime power: every instance is trivial modulo a^4 = 1
  auto f4 = zzm_gamma_omega_generators(4);
  CHECK(pair_set(f4.parametric_templates) == std::set<std::pair<long, long>>{{1, 4}, {4, 1}});
  for (const FreeWord& w : instantiate(f4, 2))
    CHECK(free_product_reduce(4, w).is_identity());
}

TEST_CASE("instantiate counting") {
  GeneratorFamily unit;
  unit.parametric_templates = {{Int(1), Int(1)}};
  auto words0 = instantiate(unit, 0);
  REQUIRE(words0.size() == 1);
  CHECK(words0[0].is_identity());  // [a, a]

  auto f69 = gamma_omega_generators(bs_params(6, 9));
  CHECK(instantiate(f69, 1).size() == 7);  // 1 + 2 * 3

  CHECK(instantiate(GeneratorFamily{}, 3).empty());
}
