#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "df0l/execution.hpp"
#include "df0l/system.hpp"
#include "df0l/word.hpp"

namespace df0l {

/// The factors of L(S) of length at most max_length, ε included, in
/// canonical order.
class FactorSet {
 public:
  /// `words` must be canonically sorted and duplicate-free.
  FactorSet(std::size_t max_length, std::vector<Word> words);

  std::size_t max_length() const { return max_length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  /// Members of length exactly n (empty beyond max_length).
  std::span<const Word> of_length(std::size_t n) const;

  /// Index of u in words(), or words().size() if absent.
  std::size_t position(WordView u) const;
  bool contains(WordView u) const { return position(u) != words_.size(); }

 private:
  std::size_t max_length_;
  std::vector<Word> words_;
  std::vector<std::size_t> offsets_;  // offsets_[n] = first index of length n
};

/// Exactly {u ∈ L(S) : |u| <= max_length}, computed as a least fixed point.
/// Throws PreconditionError for erasing systems.
FactorSet factor_language(const System& system, std::size_t max_length,
                          Execution execution = Execution::parallel);

/// u ∈ L(S).
bool contains(const System& system, WordView u);

/// Appends the length-min(|w|, max_length) factors of w: every factor of w
/// of length <= max_length is a factor of one of them.
void append_windows(WordView w, std::size_t max_length, std::vector<Word>& out);

}  // namespace df0l
