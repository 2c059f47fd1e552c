#include "df0l/morphism.hpp"

#include <algorithm>

#include "df0l/error.hpp"

namespace df0l {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw InputError("morphism needs exactly one image per letter");
  }
  for (const Word& img : images_) {
    for (Letter b : img) {
      if (b >= codomain_.size()) throw InputError("image uses a letter outside the codomain");
    }
  }
}

Morphism::Morphism(const Alphabet& alphabet, std::vector<Word> images)
    : Morphism(alphabet, alphabet, std::move(images)) {}

bool Morphism::is_non_erasing() const {
  return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

Word Morphism::apply(WordView u) const {
  Word out;
  out.reserve(image_length(u));
  for (Letter a : u) {
    const Word& img = images_.at(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word Morphism::apply_power(WordView u, std::size_t k) const {
  if (k > 0 && !is_endomorphism()) throw PreconditionError("only endomorphisms can be iterated");
  Word current(u.begin(), u.end());
  for (std::size_t i = 0; i < k; ++i) current = apply(current);
  return current;
}

std::size_t Morphism::image_length(WordView u) const {
  std::size_t n = 0;
  for (Letter a : u) n += images_.at(a).size();
  return n;
}

Morphism Morphism::power(std::size_t k) const {
  if (k == 0) throw PreconditionError("morphism power must be at least 1");
  if (!is_endomorphism()) throw PreconditionError("only endomorphisms can be iterated");
  std::vector<Word> images;
  images.reserve(images_.size());
  for (Letter a = 0; a < domain_.size(); ++a) images.push_back(apply_power(Word{a}, k));
  return Morphism(domain_, std::move(images));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw PreconditionError("cannot compose morphisms over mismatched alphabets");
  }
  std::vector<Word> images;
  images.reserve(inner.domain().size());
  for (const Word& img : inner.images()) images.push_back(outer.apply(img));
  return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

ImageLengthBounds image_length_bounds(const Morphism& m) {
  ImageLengthBounds b{m.image(0).size(), m.image(0).size()};
  for (const Word& img : m.images()) {
    b.min = std::min(b.min, img.size());
    b.max = std::max(b.max, img.size());
  }
  return b;
}

}  // namespace df0l
