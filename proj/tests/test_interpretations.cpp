#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "df0l/analyzer.hpp"
#include "df0l/error.hpp"
#include "df0l/interpretations.hpp"
#include "properties.hpp"

using namespace df0l;
using namespace df0l::test;

namespace {

std::set<Triple> triples(Analyzer& analyzer, const Word& u) {
  std::set<Triple> out;
  for (const auto& i : minimal_interpretations(analyzer, u)) out.emplace(i.left, i.preimage, i.right);
  return out;
}

}  // namespace

TEST_CASE("Thue-Morse minimal interpretations") {
  const System s = thue_morse();
  Analyzer analyzer(s);
  CHECK(triples(analyzer, w(s, "a b a")) ==
        std::set<Triple>{{w(s, "b"), w(s, "b b"), Word{}}, {Word{}, w(s, "a a"), w(s, "b")}});
  CHECK(triples(analyzer, w(s, "a a")) == std::set<Triple>{{w(s, "b"), w(s, "b a"), w(s, "b")}});
  CHECK(triples(analyzer, w(s, "a")) == std::set<Triple>{{Word{}, w(s, "a"), w(s, "b")}, {w(s, "b"), w(s, "b"), Word{}}});
  CHECK_THROWS_AS(minimal_interpretations(analyzer, w(s, "a a a")), PreconditionError);
  CHECK_THROWS_AS(minimal_interpretations(analyzer, Word{}), PreconditionError);
}

TEST_CASE("preimage length bound") {
  CHECK(preimage_length_bound(3, {2, 2}) == 2);
  CHECK(preimage_length_bound(1, {2, 2}) == 1);
  CHECK(preimage_length_bound(4, {1, 3}) == 4);
  CHECK(preimage_length_bound(7, {3, 5}) == 3);
}

TEST_CASE("compatible splits") {
  const System s = thue_morse();
  const Interpretation interp{Word{}, w(s, "a a"), w(s, "b")};
  CHECK_FALSE(compatible_split(s.morphism(), interp, w(s, "a"), w(s, "b a")));
  const auto split = compatible_split(s.morphism(), interp, w(s, "a b"), w(s, "a"));
  REQUIRE(split);
  CHECK(split->left == w(s, "a"));
  CHECK(split->right == w(s, "a"));
  const Interpretation whole{Word{}, w(s, "a b"), Word{}};
  const auto full = compatible_split(s.morphism(), whole, w(s, "a b b a"), Word{});
  REQUIRE(full);
  CHECK(full->left == w(s, "a b"));
  CHECK(full->right.empty());
}

TEST_CASE("admissible and synchronizing pairs") {
  const System s = thue_morse();
  Analyzer analyzer(s);
  CHECK(is_admissible(analyzer, w(s, "a b"), w(s, "a")));
  CHECK(is_admissible(analyzer, w(s, "a"), w(s, "b a")));
  CHECK_FALSE(is_weakly_synchronized(analyzer, w(s, "a b a")).synchronized);
  CHECK_THROWS_AS(is_admissible(analyzer, w(s, "a a"), w(s, "a")), PreconditionError);
  CHECK_THROWS_AS(is_strongly_synchronizing(analyzer, Word{}, w(s, "a b")), PreconditionError);

  // every word containing aa is synchronized, and so is every word of length 4
  const auto& lang = analyzer.language(8);
  const std::vector<Word> words(lang.words().begin(), lang.words().end());
  for (const Word& u : words) {
    if (u.empty()) continue;
    const bool has_aa = !occurrences(w(s, "a a"), u).empty();
    if (has_aa || u.size() >= 4) CHECK(is_weakly_synchronized(analyzer, u).synchronized);
  }

  // an axiom-only word has no interpretation
  const System axiom_only = parse_system("alphabet: a b\nmap a -> a a\nmap b -> a\naxiom: b b\n");
  Analyzer lonely(axiom_only);
  CHECK_FALSE(is_admissible(lonely, w(axiom_only, "b"), w(axiom_only, "b")));
  CHECK(is_weakly_synchronized(lonely, w(axiom_only, "b b")).vacuous);
}

TEST_CASE("pair predicates agree with a literal check over all interpretations") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    const System s = random_system(rng);
    Analyzer analyzer(s, Execution::serial);
    const auto& lang = analyzer.language(5);
    const std::vector<Word> words(lang.words().begin(), lang.words().end());
    for (const Word& u : words) {
      if (u.empty()) continue;
      const auto interps = minimal_interpretations(analyzer, u);
      for (std::size_t cut = 0; cut <= u.size(); ++cut) {
        const WordView left = WordView(u).first(cut), right = WordView(u).subspan(cut);
        std::size_t compatible = 0;
        std::set<Letter> last_letters;
        bool empty_left = false;
        for (const auto& interp : interps) {
          const auto split = compatible_split(s.morphism(), interp, left, right);
          if (!split) continue;
          ++compatible;
          if (split->left.empty()) empty_left = true;
          else last_letters.insert(split->left.back());
        }
        CHECK(is_admissible(analyzer, left, right) == (compatible > 0));
        CHECK(is_weakly_synchronizing(analyzer, left, right) == (compatible == interps.size()));
        if (cut > 0) {
          const bool strong =
              interps.empty() || (compatible == interps.size() && !empty_left && last_letters.size() == 1);
          CHECK(is_strongly_synchronizing(analyzer, left, right) == strong);
        }
      }
    }
  }
}

TEST_CASE("interpretations match the brute-force scan") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const auto result = compare_with_oracles(random_system(rng), 5);
    if (result.skipped) continue;
    CHECK_MESSAGE(result.interpretations.violations == 0, result.interpretations.first_failure);
  }
}
