#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace df0l {

/// Index of a letter in its alphabet (declaration order).
using Letter = std::uint32_t;

/// A finite word, stored as letter indices. The empty vector is ε.
using Word = std::vector<Letter>;

using WordView = std::span<const Letter>;

/// Canonical order on words: shorter first, then lexicographic by letter
/// declaration order.
struct CanonicalLess {
  bool operator()(WordView lhs, WordView rhs) const;
  bool operator()(const Word& lhs, const Word& rhs) const {
    return (*this)(WordView(lhs), WordView(rhs));
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Ordered set of whitespace-free letter tokens.
class Alphabet {
 public:
  /// Throws InputError on an empty list, duplicate tokens, or tokens that
  /// are empty or contain whitespace.
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(Letter a) const { return tokens_.at(a); }

  std::optional<Letter> find(std::string_view token) const;

  /// Parses a space-separated token sequence. Empty text is ε.
  Word parse_word(std::string_view text) const;

  /// Space-separated tokens; ε renders as the empty string.
  std::string render(WordView w) const;

  bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> index_;
};

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

/// Unique primitive root and the maximal exponent with root^exponent = u.
/// Throws PreconditionError on ε.
PrimitiveRoot primitive_root(WordView u);

bool is_primitive(WordView u);

/// True iff u = xy and v = yx for some x, y.
bool is_conjugate(WordView u, WordView v);

/// Every factor of u of length at most max_length (ε included), in
/// canonical order without duplicates.
std::vector<Word> factors(WordView u, std::size_t max_length);

/// Ascending start positions of pattern in text. The pattern must be
/// non-empty.
std::vector<std::size_t> occurrences(WordView pattern, WordView text);

Word power(WordView u, std::size_t n);
Word concat(WordView u, WordView v);
Word rotate(WordView u, std::size_t shift);

bool is_prefix(WordView prefix, WordView w);
bool is_suffix(WordView suffix, WordView w);

/// Letters occurring in u, as a membership mask over an alphabet of the
/// given size.
std::vector<bool> letters_of(WordView u, std::size_t alphabet_size);

}  // namespace df0l
