#include "df0l/interpretations.hpp"

#include <algorithm>

#include "df0l/analyzer.hpp"
#include "df0l/error.hpp"

namespace df0l {

std::size_t preimage_length_bound(std::size_t word_length, ImageLengthBounds bounds) {
  if (word_length == 0 || bounds.min == 0) return 1;
  // ⌊2 + (n - 2)/m⌋ = ⌊(2m + n - 2)/m⌋, and the numerator is positive for n >= 1
  const std::size_t bound = (2 * bounds.min + word_length - 2) / bounds.min;
  return std::max<std::size_t>(1, bound);
}

InterpretationIndex::InterpretationIndex(const Morphism& morphism, const FactorSet& language,
                                         std::size_t word_length)
    : word_length_(word_length) {
  if (word_length == 0) throw PreconditionError("interpretations are defined for non-empty words");
  const auto bounds = image_length_bounds(morphism);
  const std::size_t shortest = (word_length + bounds.max - 1) / bounds.max;
  const std::size_t longest = preimage_length_bound(word_length, bounds);
  if (language.max_length() < longest) {
    throw PreconditionError("factor set too short for the interpretation bound");
  }

  for (std::size_t len = std::max<std::size_t>(shortest, 1); len <= longest; ++len) {
    for (const Word& w : language.of_length(len)) {
      Word image = morphism.apply(w);
      if (image.size() < word_length) continue;
      const std::size_t first = morphism.image(w.front()).size();
      const std::size_t last = morphism.image(w.back()).size();
      const auto id = static_cast<std::uint32_t>(preimages_.size());
      bool used = false;
      for (std::size_t s = 0; s < first && s + word_length <= image.size(); ++s) {
        if (image.size() - s - word_length >= last) continue;
        Word key(image.begin() + static_cast<std::ptrdiff_t>(s),
                 image.begin() + static_cast<std::ptrdiff_t>(s + word_length));
        table_[std::move(key)].push_back({id, static_cast<std::uint32_t>(s)});
        used = true;
      }
      if (!used) continue;
      std::vector<std::uint32_t> cumulative(w.size() + 1, 0);
      for (std::size_t k = 0; k < w.size(); ++k) {
        cumulative[k + 1] = cumulative[k] + static_cast<std::uint32_t>(morphism.image(w[k]).size());
      }
      preimages_.push_back(w);
      images_.push_back(std::move(image));
      cumulative_.push_back(std::move(cumulative));
    }
  }
}

std::span<const InterpretationIndex::Occurrence> InterpretationIndex::find(WordView u) const {
  auto it = table_.find(Word(u.begin(), u.end()));
  if (it == table_.end()) return {};
  return it->second;
}

std::optional<std::size_t> InterpretationIndex::split(const Occurrence& o, std::size_t cut) const {
  const auto& cumulative = cumulative_[o.preimage];
  const auto target = static_cast<std::uint32_t>(o.offset + cut);
  auto it = std::lower_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end() || *it != target) return std::nullopt;
  return static_cast<std::size_t>(it - cumulative.begin());
}

bool InterpretationIndex::compatible_with_all(std::span<const Occurrence> occ, std::size_t cut) const {
  return std::all_of(occ.begin(), occ.end(), [&](const Occurrence& o) { return split(o, cut).has_value(); });
}

bool InterpretationIndex::compatible_with_any(std::span<const Occurrence> occ, std::size_t cut) const {
  return std::any_of(occ.begin(), occ.end(), [&](const Occurrence& o) { return split(o, cut).has_value(); });
}

std::optional<Letter> InterpretationIndex::common_split_letter(std::span<const Occurrence> occ,
                                                               std::size_t cut) const {
  std::optional<Letter> letter;
  for (const Occurrence& o : occ) {
    const auto k = split(o, cut);
    if (!k || *k == 0) return std::nullopt;
    const Letter last = preimages_[o.preimage][*k - 1];
    if (letter && *letter != last) return std::nullopt;
    letter = last;
  }
  return letter;
}

std::optional<std::size_t> InterpretationIndex::synchronizing_cut(std::span<const Occurrence> occ) const {
  for (std::size_t cut = 0; cut <= word_length_; ++cut) {
    if (compatible_with_all(occ, cut)) return cut;
  }
  return std::nullopt;
}

Interpretation InterpretationIndex::materialize(const Occurrence& o) const {
  const Word& image = images_[o.preimage];
  const auto s_end = static_cast<std::ptrdiff_t>(o.offset);
  const auto t_begin = static_cast<std::ptrdiff_t>(o.offset + word_length_);
  return {Word(image.begin(), image.begin() + s_end), preimages_[o.preimage],
          Word(image.begin() + t_begin, image.end())};
}

std::vector<Interpretation> minimal_interpretations(Analyzer& analyzer, WordView u) {
  if (u.empty()) throw PreconditionError("interpretations are defined for non-empty words");
  analyzer.require_member(u);
  const auto& index = analyzer.index(u.size());
  std::vector<Interpretation> out;
  for (const auto& o : index.find(u)) out.push_back(index.materialize(o));
  return out;
}

std::optional<PairSplit> compatible_split(const Morphism& morphism, const Interpretation& interp,
                                          WordView left, WordView right) {
  const std::size_t target = interp.left.size() + left.size();
  std::size_t length = 0;
  std::size_t k = 0;
  while (length < target && k < interp.preimage.size()) length += morphism.image(interp.preimage[k++]).size();
  if (length != target) return std::nullopt;

  PairSplit split{Word(interp.preimage.begin(), interp.preimage.begin() + static_cast<std::ptrdiff_t>(k)),
                  Word(interp.preimage.begin() + static_cast<std::ptrdiff_t>(k), interp.preimage.end())};
  if (morphism.apply(split.left) != concat(interp.left, left)) return std::nullopt;
  if (morphism.apply(split.right) != concat(right, interp.right)) return std::nullopt;
  return split;
}

namespace {

std::span<const InterpretationIndex::Occurrence> checked_lookup(Analyzer& analyzer, const Word& u,
                                                                const InterpretationIndex*& index) {
  if (u.empty()) throw PreconditionError("the pair must form a non-empty word");
  analyzer.require_member(u);
  index = &analyzer.index(u.size());
  return index->find(u);
}

}  // namespace

bool is_admissible(Analyzer& analyzer, WordView left, WordView right) {
  const Word u = concat(left, right);
  const InterpretationIndex* index = nullptr;
  const auto occ = checked_lookup(analyzer, u, index);
  return index->compatible_with_any(occ, left.size());
}

bool is_weakly_synchronizing(Analyzer& analyzer, WordView left, WordView right) {
  const Word u = concat(left, right);
  const InterpretationIndex* index = nullptr;
  const auto occ = checked_lookup(analyzer, u, index);
  return index->compatible_with_all(occ, left.size());
}

WeakSynchronization is_weakly_synchronized(Analyzer& analyzer, WordView u) {
  const Word word(u.begin(), u.end());
  const InterpretationIndex* index = nullptr;
  const auto occ = checked_lookup(analyzer, word, index);
  WeakSynchronization result;
  result.vacuous = occ.empty();
  result.cut = index->synchronizing_cut(occ);
  result.synchronized = result.cut.has_value();
  return result;
}

bool is_strongly_synchronizing(Analyzer& analyzer, WordView left, WordView right) {
  if (left.empty()) throw PreconditionError("strong synchronization needs a non-empty left part");
  const Word u = concat(left, right);
  const InterpretationIndex* index = nullptr;
  const auto occ = checked_lookup(analyzer, u, index);
  if (occ.empty()) return true;
  return index->common_split_letter(occ, left.size()).has_value();
}

}  // namespace df0l
