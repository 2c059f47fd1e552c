#include "df0l/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "df0l/error.hpp"

namespace df0l {

namespace {

bool has_whitespace(std::string_view token) {
  return std::any_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

// Knuth-Morris-Pratt failure function: border[i] is the length of the
// longest proper border of w[0..i].
std::vector<std::size_t> borders(WordView w) {
  std::vector<std::size_t> border(w.size(), 0);
  for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return border;
}

}  // namespace

bool CanonicalLess::operator()(WordView lhs, WordView rhs) const {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  const std::string_view bytes(reinterpret_cast<const char*>(w.data()),
                               w.size() * sizeof(Letter));
  return std::hash<std::string_view>{}(bytes);
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& token = tokens_[i];
    if (token.empty() || has_whitespace(token)) {
      throw InputError("invalid letter token '" + token + "'");
    }
    if (!index_.emplace(token, static_cast<Letter>(i)).second) {
      throw InputError("duplicate letter '" + token + "'");
    }
  }
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) {
      const auto token = text.substr(pos, end - pos);
      const auto letter = find(token);
      if (!letter) throw InputError("unknown letter '" + std::string(token) + "'");
      w.push_back(*letter);
    }
    pos = end;
  }
  return w;
}

std::string Alphabet::render(WordView w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens_.at(w[i]);
  }
  return out;
}

PrimitiveRoot primitive_root(WordView u) {
  if (u.empty()) throw PreconditionError("the empty word has no primitive root");
  const auto border = borders(u);
  const std::size_t period = u.size() - border.back();
  if (u.size() % period == 0) {
    return {Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(period)), u.size() / period};
  }
  return {Word(u.begin(), u.end()), 1};
}

bool is_primitive(WordView u) { return !u.empty() && primitive_root(u).exponent == 1; }

bool is_conjugate(WordView u, WordView v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const Word doubled = concat(u, u);
  return !occurrences(v, doubled).empty();
}

std::vector<Word> factors(WordView u, std::size_t max_length) {
  std::set<Word, CanonicalLess> found;
  found.insert(Word{});
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t len = 1; len <= max_length && i + len <= u.size(); ++len) {
      found.emplace(u.begin() + static_cast<std::ptrdiff_t>(i),
                    u.begin() + static_cast<std::ptrdiff_t>(i + len));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::size_t> occurrences(WordView pattern, WordView text) {
  if (pattern.empty()) throw PreconditionError("cannot search for the empty word");
  std::vector<std::size_t> found;
  const auto border = borders(pattern);
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = border[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == pattern.size()) {
      found.push_back(i + 1 - k);
      k = border[k - 1];
    }
  }
  return found;
}

Word power(WordView u, std::size_t n) {
  Word out;
  out.reserve(u.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), u.begin(), u.end());
  return out;
}

Word concat(WordView u, WordView v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word rotate(WordView u, std::size_t shift) {
  Word out(u.begin(), u.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
  }
  return out;
}

bool is_prefix(WordView prefix, WordView w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool is_suffix(WordView suffix, WordView w) {
  return suffix.size() <= w.size() &&
         std::equal(suffix.begin(), suffix.end(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::vector<bool> letters_of(WordView u, std::size_t alphabet_size) {
  std::vector<bool> mask(alphabet_size, false);
  for (Letter a : u) mask.at(a) = true;
  return mask;
}

}  // namespace df0l
