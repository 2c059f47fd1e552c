#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "df0l/language.hpp"
#include "df0l/morphism.hpp"
#include "df0l/word.hpp"

namespace df0l {

class Analyzer;

/// (s, w, t) with φ(w) = s·u·t and w ∈ L(S).
struct Interpretation {
  Word left;
  Word preimage;
  Word right;

  bool operator==(const Interpretation&) const = default;
};

/// (w', w'') with w'w'' = w, φ(w') = s·u', φ(w'') = u''·t.
struct PairSplit {
  Word left;
  Word right;

  bool operator==(const PairSplit&) const = default;
};

/// Largest preimage length a minimal interpretation of a word of the given
/// length can have: max(1, ⌊2 + (n - 2)/⌊φ⌋⌋).
std::size_t preimage_length_bound(std::size_t word_length, ImageLengthBounds bounds);

/// All minimal interpretations of every word of one fixed length, keyed by
/// the interpreted word. Built from a FactorSet that reaches the preimage
/// bound; immutable afterwards and safe to share between threads.
class InterpretationIndex {
 public:
  struct Occurrence {
    std::uint32_t preimage;  // index into preimages()
    std::uint32_t offset;    // |s|
  };

  InterpretationIndex(const Morphism& morphism, const FactorSet& language, std::size_t word_length);

  std::size_t word_length() const { return word_length_; }

  /// Minimal interpretations of u, ordered by preimage then offset.
  std::span<const Occurrence> find(WordView u) const;

  const Word& preimage(const Occurrence& o) const { return preimages_[o.preimage]; }

  /// |w'| such that |φ(w')| = |s| + cut, if the cut falls on a letter
  /// boundary of φ(w). Unique since φ is non-erasing.
  std::optional<std::size_t> split(const Occurrence& o, std::size_t cut) const;

  bool compatible_with_all(std::span<const Occurrence> occ, std::size_t cut) const;
  bool compatible_with_any(std::span<const Occurrence> occ, std::size_t cut) const;

  /// The letter every compatible w' ends with, if the cut is compatible with
  /// all interpretations and that letter is shared. Requires cut >= 1 and a
  /// non-empty occurrence list.
  std::optional<Letter> common_split_letter(std::span<const Occurrence> occ, std::size_t cut) const;

  /// First cut in 0..|u| compatible with every interpretation.
  std::optional<std::size_t> synchronizing_cut(std::span<const Occurrence> occ) const;

  Interpretation materialize(const Occurrence& o) const;

 private:
  std::size_t word_length_;
  std::vector<Word> preimages_;
  std::vector<Word> images_;
  std::vector<std::vector<std::uint32_t>> cumulative_;  // |φ(w[0..k))|
  std::unordered_map<Word, std::vector<Occurrence>, WordHash> table_;
};

/// All minimal interpretations of u, in canonical order of (w, |s|).
/// Throws PreconditionError if u is empty or u ∉ L(S).
std::vector<Interpretation> minimal_interpretations(Analyzer& analyzer, WordView u);

/// The split of interp.preimage compatible with (u', u''), if any.
std::optional<PairSplit> compatible_split(const Morphism& morphism, const Interpretation& interp,
                                          WordView left, WordView right);

bool is_admissible(Analyzer& analyzer, WordView left, WordView right);

bool is_weakly_synchronizing(Analyzer& analyzer, WordView left, WordView right);

struct WeakSynchronization {
  bool synchronized = false;
  /// u has no interpretation at all, so every split synchronizes trivially.
  bool vacuous = false;
  /// |u'| of the first synchronizing split.
  std::optional<std::size_t> cut;
};

WeakSynchronization is_weakly_synchronized(Analyzer& analyzer, WordView u);

/// Throws PreconditionError when u' is empty.
bool is_strongly_synchronizing(Analyzer& analyzer, WordView left, WordView right);

}  // namespace df0l
