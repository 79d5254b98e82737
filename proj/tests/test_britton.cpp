#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsnq/britton.hpp"
#include "bsnq/free_product.hpp"
#include "bsnq/presentations.hpp"
#include "test_util.hpp"

using namespace bsnq;
using namespace bsnq::testutil;

namespace {

const std::vector<std::string>& TA = bs_generator_names();
FreeWord parse(const std::string& s) { return parse_word(s, TA); }

// Fixpoint check: the normal form triggers no rewrite rule.
void check_sound(const BSParams& p, const BrittonNormalForm& nf) {
  for (std::size_t i = 0; i < nf.tail.size(); ++i) {
    const auto& f = nf.tail[i];
    CHECK((f.epsilon == 1 || f.epsilon == -1));
    CHECK(f.residue >= 0);
    CHECK(f.residue < (f.epsilon < 0 ? p.m : abs(p.n)));
    if (i + 1 < nf.tail.size() && f.residue == 0)
      CHECK(nf.tail[i].epsilon == nf.tail[i + 1].epsilon);
  }
}

}  // namespace

TEST_CASE("britton_reduce worked examples") {
  BSParams p23 = bs_params(2, 3);
  auto nf = britton_reduce(p23, parse("t^-1 a^2 t"));
  CHECK(nf.head == 3);
  CHECK(nf.tail.empty());

  CHECK(britton_reduce(p23, parse("[t^-1 a^2 t, a]")).is_identity());

  auto nf2 = britton_reduce(p23, parse("[t^-1 a t, a]"));
  CHECK_FALSE(nf2.is_identity());
  CHECK(nf2.t_length() == 4);
  check_sound(p23, nf2);

  BSParams p2m2 = bs_params(2, -2);
  auto nf3 = britton_reduce(p2m2, parse("t^-1 a^2 t"));
  CHECK(nf3.head == -2);
  CHECK(nf3.tail.empty());
}

TEST_CASE("is_identity worked examples") {
  BSParams p23 = bs_params(2, 3);
  CHECK(is_identity(p23, bs_relator(p23)));
  CHECK_FALSE(is_identity(p23, parse("a")));
  BSParams p69 = bs_params(6, 9);
  CHECK(is_identity(p69, parse("[a^6, t] * a^-3")));
}

TEST_CASE("words_equal worked examples") {
  for (auto [m, n] : acceptance_fixtures()) {
    BSParams p = bs_params(m, n);
    FreeWord lhs;
    lhs.append(kGenT, -1);
    lhs.append(kGenA, p.m);
    lhs.append(kGenT, 1);
    CHECK(words_equal(p, FreeWord::generator(kGenA, p.n), lhs));
  }
  BSParams p23 = bs_params(2, 3);
  CHECK_FALSE(words_equal(p23, FreeWord::generator(kGenT), FreeWord::generator(kGenA)));
  FreeWord w = parse("t a^2 t^-1 a");
  CHECK(words_equal(p23, w, w));
}

TEST_CASE("t_exponent_sum examples and reduction invariance") {
  CHECK(t_exponent_sum(parse("t^-1 a^2 t")) == 0);
  CHECK(t_exponent_sum(parse("t^3 a t^-1")) == 2);
  std::mt19937 rng(5);
  for (auto [m, n] : acceptance_fixtures()) {
    BSParams p = bs_params(m, n);
    for (int i = 0; i < 50; ++i) {
      FreeWord w = random_word(rng, 2, 8);
      CHECK(t_exponent_sum(w) == t_exponent_sum(britton_reduce(p, w).to_word()));
    }
  }
}

TEST_CASE("relator insertion does not change the normal form") {
  std::mt19937 rng(99);
  for (auto [m, n] : acceptance_fixtures()) {
    BSParams p = bs_params(m, n);
    for (int i = 0; i < 200; ++i) {
      FreeWord w = random_word(rng, 2, 6);
      FreeWord wc = splice_relator(rng, p, w);
      CHECK(britton_reduce(p, w) == britton_reduce(p, wc));
    }
  }
}

TEST_CASE("normal forms are sound and pinch-free words are nontrivial") {
  std::mt19937 rng(123);
  for (auto [m, n] : acceptance_fixtures()) {
    BSParams p = bs_params(m, n);
    for (int i = 0; i < 100; ++i) {
      check_sound(p, britton_reduce(p, random_word(rng, 2, 8)));
      BrittonNormalForm nf = random_pinch_free(rng, p);
      // Britton's lemma: a pinch-free word containing t-letters is nontrivial,
      // and the reduction must leave it fixed.
      auto back = britton_reduce(p, nf.to_word());
      CHECK(back == nf);
      CHECK_FALSE(back.is_identity());
    }
  }
}

TEST_CASE("exponents grow past machine word size without loss") {
  BSParams p = bs_params(2, 3);
  // t^-20 a^(2^20) t^20 collapses to a^(3^20)
  FreeWord w;
  w.append(kGenT, -20);
  w.append(kGenA, pow(Int(2), 20));
  w.append(kGenT, 20);
  auto nf = britton_reduce(p, w);
  CHECK(nf.tail.empty());
  CHECK(nf.head == pow(Int(3), 20));
  // and the reverse direction leaves a deep pinch-free tail
  FreeWord v;
  v.append(kGenT, 20);
  v.append(kGenA, 1);
  v.append(kGenT, -20);
  CHECK(britton_reduce(p, v).t_length() == 40);
}

TEST_CASE("free_product_reduce worked examples") {
  CHECK(free_product_reduce(2, parse("a^3")).to_word() == parse("a"));
  CHECK(free_product_reduce(2, parse("a^2 t a^4")).to_word() == parse("t"));
  auto nf = free_product_reduce(6, parse("[t^-1 a^2 t, a^3]"));
  CHECK(nf.to_word() == parse("t^-1 a^4 t a^3 t^-1 a^2 t a^3"));
  CHECK_FALSE(nf.is_identity());
  CHECK_THROWS_AS(free_product_reduce(1, parse("a")), std::invalid_argument);
}

TEST_CASE("free_product_reduce is idempotent and sound") {
  std::mt19937 rng(17);
  for (int m : {2, 4, 6, 12}) {
    for (int i = 0; i < 200; ++i) {
      FreeWord w = random_word(rng, 2, 8);
      auto nf = free_product_reduce(m, w);
      CHECK(free_product_reduce(m, nf.to_word()) == nf);
      int last_gen = -1;
      for (const auto& s : nf.syllables) {
        CHECK(s.gen != last_gen);  // strictly alternating
        if (s.gen == kGenA) {
          CHECK(s.exp >= 1);
          CHECK(s.exp < m);
        } else {
          CHECK(s.exp != 0);
        }
        last_gen = s.gen;
      }
    }
  }
}
