#pragma once

#include <cstddef>
#include <vector>

#include "df0l/word.hpp"

namespace df0l {

/// A morphism from words over `domain` to words over `codomain`, given by
/// the image of each letter. Endomorphisms have equal alphabets.
class Morphism {
 public:
  /// Throws InputError if the image count does not match the domain or an
  /// image uses a letter outside the codomain.
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);
  Morphism(const Alphabet& alphabet, std::vector<Word> images);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }

  bool is_endomorphism() const { return domain_ == codomain_; }
  bool is_non_erasing() const;

  Word apply(WordView u) const;
  /// k-fold iteration; apply_power(u, 0) = u. Requires an endomorphism.
  Word apply_power(WordView u, std::size_t k) const;

  /// |apply(u)| without materializing the image.
  std::size_t image_length(WordView u) const;

  /// The morphism iterated k times (k >= 1). Requires an endomorphism.
  Morphism power(std::size_t k) const;

  bool operator==(const Morphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
  }

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

/// outer ∘ inner.
Morphism compose(const Morphism& outer, const Morphism& inner);

struct ImageLengthBounds {
  std::size_t min = 0;  // ⌊φ⌋
  std::size_t max = 0;  // ⌈φ⌉
};

ImageLengthBounds image_length_bounds(const Morphism& m);

}  // namespace df0l
