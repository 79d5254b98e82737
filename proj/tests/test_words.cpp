#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsnq/presentations.hpp"
#include "bsnq/words.hpp"
#include "test_util.hpp"

using namespace bsnq;
using namespace bsnq::testutil;

namespace {
const std::vector<std::string>& TA = bs_generator_names();
FreeWord parse(const std::string& s) { return parse_word(s, TA); }
}  // namespace

TEST_CASE("commutator bracket expands with the a^-1 b^-1 a b convention") {
  FreeWord w = parse("[a,t]");
  FreeWord expected;
  expected.append(kGenA, -1);
  expected.append(kGenT, -1);
  expected.append(kGenA, 1);
  expected.append(kGenT, 1);
  CHECK(w == expected);
}

TEST_CASE("free cancellation happens while parsing") {
  CHECK(parse("a^2 * a^-2").is_identity());
  CHECK(parse("a^2 a^-2").is_identity());
  CHECK(parse("1").is_identity());
  CHECK(parse("t a a^-1 t^-1").is_identity());
}

TEST_CASE("exponent on a bare bracket is rejected, parenthesized accepted") {
  CHECK_THROWS_AS(parse("[t^-1 a^2 t, a]^3"), ParseError);
  FreeWord w = parse("([t^-1 a^2 t, a])^3");
  FreeWord base = parse("[t^-1 a^2 t, a]");
  // oracle: naive letter-by-letter reduction of the threefold concatenation
  std::vector<std::pair<int, long>> letters;
  for (int rep = 0; rep < 3; ++rep)
    for (const auto& s : base.syllables()) letters.emplace_back(s.gen, s.exp.get_si());
  CHECK(w == naive_reduce(letters));
}

TEST_CASE("parse errors carry positions and name checks") {
  CHECK_THROWS_AS(parse("a^"), ParseError);
  CHECK_THROWS_AS(parse("b"), ParseError);
  CHECK_THROWS_AS(parse("(a"), ParseError);
  CHECK_THROWS_AS(parse("[a a]"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("a * q");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("format examples") {
  CHECK(format_word(FreeWord(), TA) == "1");
  CHECK(format_word(parse("[a,t]"), TA) == "a^-1 t^-1 a t");
  CHECK(format_word(parse("a^2*t^-3"), TA) == "a^2 t^-3");
}

TEST_CASE("parse/format round-trip on random words") {
  std::mt19937 rng(42);
  for (int i = 0; i < 300; ++i) {
    FreeWord w = random_word(rng, 2, 8);
    CHECK(parse(format_word(w, TA)) == w);
  }
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, 1);
  std::uniform_int_distribution<long> exp(-4, 4);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::pair<int, long>> letters;
    long raw_len = 0;
    int n = i % 9;
    for (int j = 0; j < n; ++j) {
      long e = exp(rng);
      letters.emplace_back(gen(rng), e);
      raw_len += e < 0 ? -e : e;
    }
    FreeWord w = naive_reduce(letters);
    // building a FreeWord syllable by syllable gives the same reduced word
    FreeWord direct;
    for (auto [g, e] : letters) direct.append(g, e);
    CHECK(direct == w);
    CHECK(direct.letter_length() <= raw_len);
    // idempotent: re-appending the reduced word's syllables changes nothing
    FreeWord again;
    for (const auto& s : w.syllables()) again.append(s.gen, s.exp);
    CHECK(again == w);
  }
}

TEST_CASE("commutator_word examples") {
  FreeWord a = FreeWord::generator(kGenA);
  FreeWord t = FreeWord::generator(kGenT);
  CHECK(commutator_word(a, a).is_identity());
  CHECK(commutator_word(t, a) == parse("t^-1 a^-1 t a"));
  CHECK(commutator_word(parse("t^-1 a^2 t"), FreeWord()).is_identity());
}

TEST_CASE("inverse and pow") {
  FreeWord w = parse("t a^2 t^-1 a");
  CHECK((w * w.inverse()).is_identity());
  CHECK(w.pow(0).is_identity());
  CHECK(w.pow(-2) == (w * w).inverse());
}
