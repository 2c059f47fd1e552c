#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "df0l/error.hpp"
#include "df0l/language.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace df0l;
using namespace df0l::test;

TEST_CASE("Thue-Morse factor complexity") {
  const FactorSet lang = factor_language(thue_morse(), 9);
  const std::size_t expected[] = {1, 2, 4, 6, 10, 12, 16, 20, 22, 24};
  for (std::size_t n = 0; n <= 9; ++n) CHECK(lang.of_length(n).size() == expected[n]);
  const System tm = thue_morse();
  CHECK(lang.contains(w(tm, "a a b a")));
  CHECK_FALSE(lang.contains(w(tm, "a a a")));
  CHECK_FALSE(lang.contains(w(tm, "b b b")));
  const auto three = lang.of_length(3);
  CHECK(std::vector<Word>(three.begin(), three.end()) ==
        std::vector<Word>{w(tm, "a a b"), w(tm, "a b a"), w(tm, "a b b"), w(tm, "b a a"), w(tm, "b a b"),
                          w(tm, "b b a")});
}

TEST_CASE("empty length and membership") {
  const FactorSet lang = factor_language(thue_morse(), 0);
  CHECK(lang.size() == 1);
  CHECK(lang.contains(Word{}));
  const System s = two_axiom_power();
  CHECK(contains(s, w(s, "a d")));
  CHECK(contains(s, w(s, "b")));
  CHECK_FALSE(contains(System(s.morphism().power(2), {w(s, "b")}), w(s, "a d")));
}

TEST_CASE("erasing systems are refused") {
  const System erasing = parse_system("alphabet: a b\nmap a -> a b\nmap b ->\naxiom: a\n");
  CHECK_THROWS_AS(factor_language(erasing, 3), PreconditionError);
}

TEST_CASE("factor_language matches the unrolling oracle on random systems") {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const System s = random_system(rng);
    const auto expected = unrolled_language(s, 6);
    if (!expected) continue;
    ++compared;
    const FactorSet got = factor_language(s, 6);
    CHECK(WordSet(got.words().begin(), got.words().end()) == *expected);
  }
  CHECK(compared > 150);
}

TEST_CASE("languages are factorial and extendable") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const System s = random_system(rng);
    const FactorSet lang = factor_language(s, 6);
    for (const Word& u : lang.words()) {
      if (u.empty()) continue;
      CHECK(lang.contains(WordView(u).first(u.size() - 1)));
      CHECK(lang.contains(WordView(u).subspan(1)));
    }
    for (const Word& x : s.axioms()) {
      if (x.size() <= 6) CHECK(lang.contains(x));
    }
  }
}

TEST_CASE("serial and parallel languages agree") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const System s = random_system(rng);
    const FactorSet a = factor_language(s, 7, Execution::serial);
    const FactorSet b = factor_language(s, 7, Execution::parallel);
    CHECK(std::vector<Word>(a.words().begin(), a.words().end()) ==
          std::vector<Word>(b.words().begin(), b.words().end()));
  }
}
