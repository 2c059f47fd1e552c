#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "df0l/error.hpp"
#include "df0l/system.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace df0l;
using namespace df0l::test;

namespace {

LetterSet letters(const System& s, const char* text) { return s.alphabet().parse_word(text); }

}  // namespace

TEST_CASE("validation") {
  const auto tm = validate(thue_morse());
  CHECK(tm.valid);
  CHECK(tm.propagating);

  const System erasing = parse_system("alphabet: a b c\nmap a -> a b\nmap b -> c\nmap c ->\naxiom: a\n");
  const auto report = validate(erasing);
  CHECK(report.valid);
  CHECK_FALSE(report.propagating);
  CHECK_THROWS_AS(require_propagating(erasing), PreconditionError);

  const Alphabet ab({"a", "b"});
  const System no_axioms(Morphism(ab, {Word{0, 1}, Word{1, 0}}), {});
  CHECK_FALSE(validate(no_axioms).valid);
  const System empty_axiom(Morphism(ab, {Word{0, 1}, Word{1, 0}}), {Word{}});
  CHECK_FALSE(validate(empty_axiom).valid);
}

TEST_CASE("morphism application") {
  const System tm = thue_morse();
  CHECK(tm.morphism().apply(w(tm, "b a")) == w(tm, "b a a b"));
  CHECK(tm.morphism().apply(Word{}).empty());
  const System s = two_axiom_power();
  CHECK(s.morphism().apply_power(w(s, "b"), 2) == w(s, "c b d"));
  CHECK(s.morphism().power(2).image(w(s, "b")[0]) == w(s, "c b d"));
}

TEST_CASE("image length bounds") {
  CHECK(image_length_bounds(thue_morse().morphism()).min == 2);
  CHECK(image_length_bounds(thue_morse().morphism()).max == 2);
  CHECK(image_length_bounds(eventually_injective().morphism()).min == 3);
  CHECK(image_length_bounds(eventually_injective().morphism()).max == 5);
  const Alphabet a({"a"});
  CHECK(image_length_bounds(Morphism(a, {Word{0}})).max == 1);
}

TEST_CASE("power systems add the intermediate axioms") {
  const System s = two_axiom_power();
  CHECK(power_system(s, 2).axioms() == std::vector<Word>{w(s, "b"), w(s, "a d")});
  const System tm = thue_morse();
  const System tm2 = power_system(tm, 2);
  CHECK(tm2.morphism().image(0) == w(tm, "a b b a"));
  CHECK(tm2.morphism().image(1) == w(tm, "b a a b"));
  CHECK(tm2.axioms() == std::vector<Word>{w(tm, "a"), w(tm, "a b")});
  CHECK(power_system(tm, 1) == tm);
  CHECK_THROWS_AS(power_system(tm, 0), PreconditionError);
}

TEST_CASE("letter growth") {
  const System s = two_axiom_power();
  const auto report = classify_letters(s.morphism());
  CHECK(report.bounded == letters(s, "c d"));
  CHECK(report.unbounded == letters(s, "a b"));
  CHECK(report.invariant_exponent == 2);

  CHECK(classify_letters(thue_morse().morphism()).bounded.empty());
  CHECK(invariant_exponent(thue_morse().morphism()) == 1);
  CHECK(minimal_invariant_subalphabets(thue_morse().morphism(), 1) ==
        std::vector<LetterSet>{letters(thue_morse(), "a b")});

  const System bc = bc_repetition();
  CHECK(classify_letters(bc.morphism()).bounded.empty());
  CHECK(minimal_invariant_subalphabets(bc.morphism(), 1) == std::vector<LetterSet>{letters(bc, "b c")});
  CHECK(invariant_exponent(bc.morphism()) == 2);
  CHECK(classify_letters(bc.morphism()).minimal_invariant_subalphabets == std::vector<LetterSet>{letters(bc, "b c")});

  const Alphabet a({"a"});
  const Morphism identity(a, {Word{0}});
  CHECK(invariant_exponent(identity) == 1);
  CHECK(minimal_invariant_subalphabets(identity, 1).empty());
}

TEST_CASE("unbounded letters agree with brute-force iteration") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const System s = random_system(rng);
    const auto expected = brute_force_bounded(s.morphism());
    const auto unbounded = unbounded_letters(s.morphism());
    for (Letter a = 0; a < s.alphabet().size(); ++a) CHECK(unbounded[a] == !expected[a]);
  }
}

TEST_CASE("invariant exponent makes the letter alphabets p-periodic") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const System s = random_system(rng);
    const std::size_t p = invariant_exponent(s.morphism());
    REQUIRE(p >= 1);
    const auto once = iterated_alphabets(s.morphism(), p);
    const auto twice = iterated_alphabets(s.morphism(), 2 * p);
    CHECK(once == twice);
    for (const auto& set : minimal_invariant_subalphabets(s.morphism(), p)) {
      std::vector<bool> mask(s.alphabet().size(), false);
      for (Letter a : set) mask[a] = true;
      for (Letter a : set) {
        for (std::size_t b = 0; b < mask.size(); ++b) {
          if (once[a][b]) CHECK(mask[b]);
        }
      }
    }
  }
}
