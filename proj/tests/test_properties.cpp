#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "properties.hpp"

using namespace df0l;
using namespace df0l::test;

namespace {

constexpr std::size_t kSystems = 150;

void require_clean(const Tally& tally) {
  CHECK(tally.checked > 0);
  CHECK_MESSAGE(tally.violations == 0, tally.first_failure);
}

}  // namespace

TEST_CASE("interpretation lengths stay within the preimage bounds") {
  std::mt19937_64 rng(81);
  Tally tally;
  for (std::size_t i = 0; i < kSystems; ++i) tally.merge(lemma_one_bounds(random_system(rng)));
  require_clean(tally);
}

TEST_CASE("synchronizing pairs extend to longer contexts") {
  std::mt19937_64 rng(82);
  Tally tally;
  for (std::size_t i = 0; i < kSystems; ++i) tally.merge(lemma_two_extension(random_system(rng), rng));
  require_clean(tally);
}

TEST_CASE("weak synchronization transfers from powers") {
  std::mt19937_64 rng(83);
  Tally tally;
  for (std::size_t i = 0; i < kSystems; ++i) {
    const System s = random_system(rng);
    tally.merge(power_transfer(s, 2));
    tally.merge(power_transfer(s, 3));
  }
  require_clean(tally);
}

TEST_CASE("weak threshold is bounded by the strong one") {
  std::mt19937_64 rng(84);
  Tally tally;
  for (std::size_t i = 0; i < kSystems; ++i) tally.merge(threshold_inequality(random_system(rng)));
  require_clean(tally);
}

TEST_CASE("twining commutes with iteration") {
  std::mt19937_64 rng(85);
  require_clean(twining_commutation(rng, 1000));
}

TEST_CASE("powers of strongly circular systems are weakly circular") {
  for (const System& s : {thue_morse(), eventually_injective(), non_eventually_injective()}) {
    for (std::size_t n : {2, 3}) {
      Analyzer powered(power_system(s, n));
      ThresholdOptions options;
      options.cutoff = 120;  // the cubes need D_w in the 70s and 80s
      CHECK(weak_threshold(powered, options).status == ThresholdStatus::found);
    }
  }
}

TEST_CASE("a system that is not weakly circular is repetitive") {
  Analyzer squared(power_system(bc_repetition(), 2));
  ThresholdOptions options;
  options.cutoff = 20;
  REQUIRE(weak_threshold(squared, options).status == ThresholdStatus::cutoff_exceeded);
  CHECK(detect_unbounded_repetitive(squared).repetitive());
}
