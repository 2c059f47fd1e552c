#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "df0l/morphism.hpp"
#include "df0l/word.hpp"

namespace df0l {

/// A DF0L system: an endomorphism together with a finite set of axioms.
/// Axioms are stored deduplicated in canonical order. Construction never
/// rejects a structurally odd system; use validate() to inspect it.
class System {
 public:
  System(Morphism morphism, std::vector<Word> axioms);

  const Alphabet& alphabet() const { return morphism_.domain(); }
  const Morphism& morphism() const { return morphism_; }
  const std::vector<Word>& axioms() const { return axioms_; }

  /// PDF0L: the morphism is non-erasing.
  bool is_propagating() const { return morphism_.is_non_erasing(); }

  bool operator==(const System& other) const {
    return morphism_ == other.morphism_ && axioms_ == other.axioms_;
  }

 private:
  Morphism morphism_;
  std::vector<Word> axioms_;
};

struct ValidationReport {
  bool valid = true;
  bool propagating = false;
  std::vector<std::string> errors;
};

ValidationReport validate(const System& system);

/// Throws PreconditionError unless the system is valid and propagating.
/// Every analysis calls this first.
void require_propagating(const System& system);

/// S^k: morphism φ^k and axioms {φ^i(w) : w ∈ W, 0 <= i < k}.
System power_system(const System& system, std::size_t k);

using LetterSet = std::vector<Letter>;

struct GrowthReport {
  LetterSet bounded;
  LetterSet unbounded;
  std::size_t invariant_exponent = 1;
  std::vector<LetterSet> minimal_invariant_subalphabets;
};

/// Mask of unbounded letters. A letter is unbounded iff it reaches, in the
/// graph a -> b for b ∈ alph(φ(a)), a letter that lies on a cycle and has
/// an image of length at least two. Requires a non-erasing endomorphism.
std::vector<bool> unbounded_letters(const Morphism& m);

/// Smallest p >= 1 with alph(φ^p(a)) = alph(φ^{pk}(a)) for all a, k >= 1.
std::size_t invariant_exponent(const Morphism& m);

/// Inclusion-minimal p-invariant sets among alph(φ^p(g)), g unbounded.
std::vector<LetterSet> minimal_invariant_subalphabets(const Morphism& m, std::size_t p);

GrowthReport classify_letters(const Morphism& m);

/// alph(φ^k(a)) for every letter a.
std::vector<std::vector<bool>> iterated_alphabets(const Morphism& m, std::size_t k);

}  // namespace df0l
