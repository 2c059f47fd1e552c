#include "df0l/circularity.hpp"

#include <algorithm>

#include "df0l/error.hpp"
#include "df0l/kernels.hpp"

namespace df0l {

namespace {

template <typename T>
std::vector<T> sample(const std::vector<T>& items, std::size_t limit) {
  return {items.begin(), items.begin() + static_cast<std::ptrdiff_t>(std::min(limit, items.size()))};
}

}  // namespace

ThresholdReport weak_threshold(Analyzer& analyzer, const ThresholdOptions& options) {
  if (options.cutoff == 0) throw PreconditionError("cutoff must be at least 1");
  const std::size_t letters = analyzer.system().alphabet().size();
  ThresholdReport report;
  report.mode = ThresholdMode::weak;

  std::vector<Word> previous;  // non-synchronized words of length L - 1, sorted
  for (std::size_t length = 1; length <= options.cutoff; ++length) {
    // index() may regrow the language, so take it first
    const InterpretationIndex& index = analyzer.index(length);
    const FactorSet& lang = analyzer.language(length);

    std::vector<Word> candidates;
    if (length == 1) {
      const auto singles = lang.of_length(1);
      candidates.assign(singles.begin(), singles.end());
    } else {
      // a word with a synchronized prefix or suffix is itself synchronized
      for (const Word& x : previous) {
        for (Letter c = 0; c < letters; ++c) {
          Word y = x;
          y.push_back(c);
          if (!lang.contains(y)) continue;
          if (!std::binary_search(previous.begin(), previous.end(), Word(y.begin() + 1, y.end()))) continue;
          candidates.push_back(std::move(y));
        }
      }
    }

    const auto flags = kernels::weak_level_flags(index, candidates, analyzer.execution());
    std::vector<Word> current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (flags[i]) current.push_back(std::move(candidates[i]));
    }

    if (current.empty()) {
      report.status = ThresholdStatus::found;
      report.threshold = length - 1;
      report.last_level = length;
      report.word_witnesses = sample(previous, options.witness_limit);
      return report;
    }
    previous = std::move(current);
  }

  report.status = ThresholdStatus::cutoff_exceeded;
  report.last_level = options.cutoff;
  report.word_witnesses = sample(previous, options.witness_limit);
  return report;
}

ThresholdReport strong_threshold(Analyzer& analyzer, const ThresholdOptions& options) {
  if (options.cutoff == 0) throw PreconditionError("cutoff must be at least 1");
  ThresholdReport report;
  report.mode = ThresholdMode::strong;

  if (options.repetition_check) {
    const auto verdict = detect_unbounded_repetitive(analyzer, options.period_bound);
    if (verdict.repetitive()) {
      report.status = ThresholdStatus::not_strongly_circular;
      report.repetition = verdict.witness;
      return report;
    }
  }

  // An admissible pair with both sides longer than D + 1 restricts to an
  // admissible pair at level D + 1, and synchronization lifts back, so one
  // level per D suffices.
  std::vector<WordPair> previous;
  for (std::size_t threshold = 0; threshold < options.cutoff; ++threshold) {
    const std::size_t half = threshold + 1;
    const InterpretationIndex& index = analyzer.index(2 * half);
    const FactorSet& lang = analyzer.language(2 * half);
    const auto words = lang.of_length(2 * half);

    const auto status = kernels::strong_level_status(index, words, half, analyzer.execution());
    std::vector<WordPair> failures;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (status[i] != kernels::PairStatus::failing) continue;
      failures.emplace_back(Word(words[i].begin(), words[i].begin() + static_cast<std::ptrdiff_t>(half)),
                            Word(words[i].begin() + static_cast<std::ptrdiff_t>(half), words[i].end()));
    }

    if (failures.empty()) {
      report.status = ThresholdStatus::found;
      report.threshold = threshold;
      report.last_level = half;
      report.pair_witnesses = sample(previous, options.witness_limit);
      return report;
    }
    previous = std::move(failures);
  }

  report.status = ThresholdStatus::cutoff_exceeded;
  report.last_level = options.cutoff;
  report.pair_witnesses = sample(previous, options.witness_limit);
  return report;
}

std::size_t weak_power_transfer_bound(const System& system, std::size_t k) {
  if (k < 2) throw PreconditionError("power must be at least 2");
  require_propagating(system);
  const Morphism& m = system.morphism();
  std::size_t longest = 0;
  for (const Word& x : system.axioms()) longest = std::max(longest, m.apply_power(x, k - 2).size());
  return image_length_bounds(m).max * longest;
}

ThresholdBounds check_threshold_bounds(const System& system, std::size_t weak, std::size_t strong,
                                       std::optional<std::size_t> delta) {
  const auto max_image = static_cast<long long>(image_length_bounds(system.morphism()).max);
  const auto dw = static_cast<long long>(weak);
  const auto ds = static_cast<long long>(strong);

  ThresholdBounds bounds;
  bounds.weak_from_strong = {"D_w <= 2*D_s + max_image", true, dw <= 2 * ds + max_image, dw, 2 * ds + max_image};
  bounds.strong_from_weak.relation = "D_s <= D_w + delta + 1";
  if (delta) {
    const auto rhs = dw + static_cast<long long>(*delta) + 1;
    bounds.strong_from_weak = {bounds.strong_from_weak.relation, true, ds <= rhs, ds, rhs};
  }
  return bounds;
}

}  // namespace df0l
