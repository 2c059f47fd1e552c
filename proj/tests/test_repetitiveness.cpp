#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "df0l/analyzer.hpp"
#include "df0l/error.hpp"
#include "df0l/language.hpp"
#include "df0l/repetitiveness.hpp"
#include "systems.hpp"

using namespace df0l;
using namespace df0l::test;

TEST_CASE("fixed point prefixes") {
  const System tm = thue_morse();
  CHECK(fixed_point_prefix(tm.morphism(), 0, 1, 8) == w(tm, "a b b a b a a b"));
  CHECK(fixed_point_prefix(tm.morphism(), 0, 1, 1) == w(tm, "a"));
  CHECK(fixed_point_prefix(tm.morphism(), 1, 2, 8) == tm.morphism().apply_power(w(tm, "b"), 3));
  CHECK_THROWS_AS(fixed_point_prefix(tm.morphism(), 1, 0, 4), PreconditionError);
  const System bc = bc_repetition();
  CHECK_THROWS_AS(fixed_point_prefix(bc.morphism(), w(bc, "c")[0], 1, 4), PreconditionError);
  CHECK(fixed_point_prefix(bc.morphism(), w(bc, "b")[0], 1, 6) == w(bc, "b c b c b c"));
}

TEST_CASE("repetition detector") {
  const System bc = bc_repetition();
  Analyzer analyzer(bc);
  const auto verdict = detect_unbounded_repetitive(analyzer);
  REQUIRE(verdict.repetitive());
  CHECK(verdict.witness->letter == w(bc, "b")[0]);
  CHECK(verdict.witness->power == 1);
  CHECK(verdict.witness->period == w(bc, "b c"));
  CHECK(verdict.witness->exponent == 2);
  CHECK(bc.morphism().apply(verdict.witness->period) == power(verdict.witness->period, 2));
  // the certified powers really are in the language
  for (std::size_t k = 1; k <= 4; ++k) CHECK(contains(bc, power(w(bc, "b c"), k)));

  Analyzer tm(thue_morse());
  const auto none = detect_unbounded_repetitive(tm, 64);
  CHECK_FALSE(none.repetitive());
  CHECK(none.period_bound == 64);

  Analyzer ev(eventually_injective());
  CHECK_FALSE(detect_unbounded_repetitive(ev).repetitive());
  CHECK_THROWS_AS(detect_unbounded_repetitive(ev, 0), PreconditionError);
}

TEST_CASE("omega candidates") {
  const System bc = bc_repetition();
  Analyzer analyzer(bc);
  const auto candidates = omega_candidates(analyzer, 2, 4);
  auto has = [&](const Word& v) {
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](const OmegaCandidate& c) { return c.word == v && c.unbounded; });
  };
  CHECK(has(w(bc, "b c")));
  CHECK(has(w(bc, "c b")));

  Analyzer tm(thue_morse());
  CHECK(omega_candidates(tm, 4, 3).empty());
  CHECK(omega_candidates(tm, 1, 1).size() == 2);
}

TEST_CASE("power in a preimage") {
  const Alphabet ab({"a", "b"});
  const Morphism identity(ab, {Word{0}, Word{1}});
  const auto found = find_power_in_preimage(identity, power(Word{0, 1}, 5), Word{0, 1}, 2);
  CHECK(found.root == Word{0, 1});
  CHECK(found.exponent >= 2);

  const Alphabet xy({"x", "y"});
  const Morphism collapse(xy, ab, {Word{0, 1}, Word{0, 1}});
  CHECK_THROWS_AS(find_power_in_preimage(collapse, Word{0, 1}, Word{0, 1}, 2), PreconditionError);

  const Alphabet x({"x"});
  const Morphism square(x, ab, {Word{0, 1, 0, 1}});
  const auto single = find_power_in_preimage(square, Word{0, 0, 0}, Word{0, 1}, 2);
  CHECK(single.root == Word{0});
  CHECK(is_conjugate(primitive_root(square.apply(single.root)).root, Word{0, 1}));
}

TEST_CASE("lifting repetitions") {
  const System bc = bc_repetition();
  Analyzer analyzer(bc);
  const auto lifted = lift_repetition(analyzer, w(bc, "b c"), 4);
  REQUIRE(lifted);
  CHECK(*lifted == w(bc, "b c"));
  const auto conjugate = lift_repetition(analyzer, w(bc, "c b"), 4);
  REQUIRE(conjugate);
  CHECK(is_conjugate(*conjugate, w(bc, "b c")));

  Analyzer tm(thue_morse());
  CHECK_FALSE(lift_repetition(tm, w(thue_morse(), "a b"), 6));
}
