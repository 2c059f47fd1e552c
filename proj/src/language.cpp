#include "df0l/language.hpp"

#include <algorithm>
#include <unordered_set>

#include "df0l/error.hpp"
#include "df0l/kernels.hpp"

namespace df0l {

FactorSet::FactorSet(std::size_t max_length, std::vector<Word> words)
    : max_length_(max_length), words_(std::move(words)), offsets_(max_length + 2, 0) {
  // offsets_[n] = number of words shorter than n
  std::size_t i = 0;
  for (std::size_t n = 0; n <= max_length + 1; ++n) {
    while (i < words_.size() && words_[i].size() < n) ++i;
    offsets_[n] = i;
  }
}

std::span<const Word> FactorSet::of_length(std::size_t n) const {
  if (n > max_length_) return {};
  return std::span<const Word>(words_).subspan(offsets_[n], offsets_[n + 1] - offsets_[n]);
}

std::size_t FactorSet::position(WordView u) const {
  const auto slice = of_length(u.size());
  auto it = std::lower_bound(slice.begin(), slice.end(), u,
                             [](const Word& lhs, WordView rhs) { return CanonicalLess{}(WordView(lhs), rhs); });
  if (it == slice.end() || !std::equal(it->begin(), it->end(), u.begin(), u.end())) return words_.size();
  return offsets_[u.size()] + static_cast<std::size_t>(it - slice.begin());
}

void append_windows(WordView w, std::size_t max_length, std::vector<Word>& out) {
  if (w.size() <= max_length) {
    out.emplace_back(w.begin(), w.end());
    return;
  }
  for (std::size_t i = 0; i + max_length <= w.size(); ++i) {
    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(i),
                     w.begin() + static_cast<std::ptrdiff_t>(i + max_length));
  }
}

FactorSet factor_language(const System& system, std::size_t max_length, Execution execution) {
  require_propagating(system);
  if (max_length == 0) return FactorSet(0, {Word{}});

  // The language is the factor closure of a set of generator words: the
  // windows of the axioms, closed under taking windows of images.
  std::unordered_set<Word, WordHash> generators;
  std::vector<Word> frontier;
  {
    std::vector<Word> seeds;
    for (const Word& w : system.axioms()) append_windows(w, max_length, seeds);
    for (Word& w : seeds) {
      if (generators.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  while (!frontier.empty()) {
    auto produced = kernels::expand_windows(system.morphism(), frontier, max_length, execution);
    frontier.clear();
    for (Word& w : produced) {
      if (generators.insert(w).second) frontier.push_back(std::move(w));
    }
  }

  // Factor closure, one length at a time: every factor of length n - 1 of a
  // member of length >= n is a prefix or suffix of a member of length n.
  std::vector<std::unordered_set<Word, WordHash>> levels(max_length + 1);
  for (const Word& g : generators) levels[g.size()].insert(g);
  for (std::size_t n = max_length; n >= 1; --n) {
    for (const Word& x : levels[n]) {
      levels[n - 1].emplace(x.begin(), x.end() - 1);
      levels[n - 1].emplace(x.begin() + 1, x.end());
    }
  }

  std::vector<Word> words;
  for (std::size_t n = 0; n <= max_length; ++n) {
    const std::size_t first = words.size();
    words.insert(words.end(), levels[n].begin(), levels[n].end());
    std::sort(words.begin() + static_cast<std::ptrdiff_t>(first), words.end(), CanonicalLess{});
  }
  return FactorSet(max_length, std::move(words));
}

bool contains(const System& system, WordView u) {
  return factor_language(system, u.size(), Execution::serial).contains(u);
}

}  // namespace df0l
