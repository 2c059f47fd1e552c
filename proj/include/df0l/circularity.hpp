#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "df0l/analyzer.hpp"
#include "df0l/repetitiveness.hpp"
#include "df0l/system.hpp"

namespace df0l {

enum class ThresholdMode { weak, strong };

enum class ThresholdStatus {
  found,                  // threshold computed exactly
  cutoff_exceeded,        // search ran out of levels; no verdict
  not_strongly_circular,  // a repetition certificate rules strong circularity out
};

using WordPair = std::pair<Word, Word>;

/// Outcome of a threshold search. For `found`, `threshold` is D and the
/// witnesses certify that D is tight: non-synchronized words of length D
/// (weak) or failing admissible pairs at level D (strong). For
/// `cutoff_exceeded`, the witnesses sample the survivors of the last level.
struct ThresholdReport {
  ThresholdMode mode = ThresholdMode::weak;
  ThresholdStatus status = ThresholdStatus::cutoff_exceeded;
  std::size_t threshold = 0;
  std::size_t last_level = 0;
  std::vector<Word> word_witnesses;
  std::vector<WordPair> pair_witnesses;
  std::optional<RepetitionWitness> repetition;
};

struct ThresholdOptions {
  std::size_t cutoff = 24;
  /// Strong search only: run the repetition detector first.
  bool repetition_check = true;
  std::optional<std::size_t> period_bound;
  std::size_t witness_limit = 8;
};

/// Smallest D such that every word of L(S) longer than D is weakly
/// synchronized, searched for D < cutoff. Candidates at length L are
/// restricted to words whose length L - 1 prefix and suffix were not
/// synchronized.
ThresholdReport weak_threshold(Analyzer& analyzer, const ThresholdOptions& options = {});

/// Smallest D such that every admissible pair with |u'|, |u''| > D is
/// strongly synchronizing, searched over levels |u'| = |u''| = D + 1 for
/// D < cutoff.
ThresholdReport strong_threshold(Analyzer& analyzer, const ThresholdOptions& options = {});

/// ⌈φ⌉ · max_{x ∈ W} |φ^{k-2}(x)|: longer words weakly synchronized in S^k
/// are weakly synchronized in S. Requires k >= 2.
std::size_t weak_power_transfer_bound(const System& system, std::size_t k);

struct BoundCheck {
  std::string relation;
  bool checked = false;
  bool holds = false;
  long long lhs = 0;
  long long rhs = 0;
  long long slack() const { return rhs - lhs; }
};

struct ThresholdBounds {
  BoundCheck weak_from_strong;  // D_w <= 2 D_s + ⌈φ⌉
  BoundCheck strong_from_weak;  // D_s <= D_w + δ + 1, only for a known δ
};

ThresholdBounds check_threshold_bounds(const System& system, std::size_t weak, std::size_t strong,
                                       std::optional<std::size_t> delta);

}  // namespace df0l
