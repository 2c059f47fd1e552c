#include "df0l/repetitiveness.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "df0l/error.hpp"
#include "df0l/system.hpp"

namespace df0l {

namespace {

constexpr std::size_t kLengthCap = std::size_t{1} << 22;

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

// |φ^k(c)| for every letter, saturating.
std::vector<std::size_t> iterated_image_lengths(const Morphism& m, std::size_t k) {
  std::vector<std::size_t> lengths(m.domain().size(), 1);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::size_t> next(lengths.size(), 0);
    for (Letter c = 0; c < lengths.size(); ++c) {
      for (Letter d : m.image(c)) next[c] = saturating_add(next[c], lengths[d]);
    }
    lengths = std::move(next);
  }
  return lengths;
}

Letter iterated_first_letter(const Morphism& m, Letter a, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) a = m.image(a).front();
  return a;
}

// Appends letters of φ^depth(c) until `out` reaches `limit`.
void append_iterated_image(const Morphism& m, Letter c, std::size_t depth, std::size_t limit, Word& out) {
  if (out.size() >= limit) return;
  if (depth == 0) {
    out.push_back(c);
    return;
  }
  for (Letter d : m.image(c)) {
    append_iterated_image(m, d, depth - 1, limit, out);
    if (out.size() >= limit) return;
  }
}

std::vector<std::size_t> z_function(WordView x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && x[z[i]] == x[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

bool returns_to_itself(const Morphism& m, Letter a, std::size_t power) {
  return iterated_first_letter(m, a, power) == a && iterated_image_lengths(m, power)[a] >= 2;
}

}  // namespace

std::size_t default_period_bound(const Morphism& m) {
  constexpr std::size_t kCeiling = 4096;
  const std::size_t base = image_length_bounds(m).max;
  std::size_t bound = 1;
  for (std::size_t i = 0; i <= m.domain().size() && bound < kCeiling; ++i) bound *= std::max<std::size_t>(base, 1);
  return std::clamp<std::size_t>(bound, 64, kCeiling);
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t power, std::size_t n) {
  if (!m.is_endomorphism() || !m.is_non_erasing()) {
    throw PreconditionError("fixed points need a non-erasing endomorphism");
  }
  if (power == 0 || a >= m.domain().size() || !returns_to_itself(m, a, power)) {
    throw PreconditionError("the iterated image of the letter must start with it and be longer than it");
  }
  // x = φ^ℓ(x), so x is the concatenation of φ^ℓ(x[0]), φ^ℓ(x[1]), ...
  Word x;
  append_iterated_image(m, a, power, n, x);
  for (std::size_t j = 1; x.size() < n; ++j) append_iterated_image(m, x[j], power, n, x);
  x.resize(n);
  return x;
}

RepetitivenessVerdict detect_unbounded_repetitive(Analyzer& analyzer, std::optional<std::size_t> period_bound) {
  const Morphism& m = analyzer.morphism();
  const std::size_t letters = m.domain().size();
  const std::size_t bound = period_bound.value_or(default_period_bound(m));
  if (bound == 0) throw PreconditionError("period bound must be at least 1");

  RepetitivenessVerdict verdict;
  verdict.power_bound = letters;
  verdict.period_bound = bound;

  const auto unbounded = unbounded_letters(m);
  for (Letter a = 0; a < letters; ++a) {
    if (!unbounded[a] || !analyzer.contains(Word{a})) continue;
    for (std::size_t power = 1; power <= letters; ++power) {
      if (!returns_to_itself(m, a, power)) continue;
      const auto lengths = iterated_image_lengths(m, power);
      const Word head = fixed_point_prefix(m, a, power, bound);

      // image_end[k] = |φ^ℓ(x[0..k))|
      std::vector<std::size_t> image_end(bound + 1, 0);
      std::size_t scanned = 0;
      for (std::size_t k = 0; k < bound; ++k) {
        image_end[k + 1] = saturating_add(image_end[k], lengths[head[k]]);
        if (image_end[k + 1] > kLengthCap) break;
        scanned = k + 1;
      }
      verdict.period_bound = std::min(verdict.period_bound, scanned);
      if (scanned == 0) continue;

      // φ^ℓ(u) is a prefix of the fixed point, so φ^ℓ(u) = u^n iff that
      // prefix has period |u| and length divisible by |u|.
      const Word x = fixed_point_prefix(m, a, power, image_end[scanned]);
      const auto z = z_function(x);
      for (std::size_t k = 1; k <= scanned; ++k) {
        const std::size_t end = image_end[k];
        if (end % k == 0 && end >= 2 * k && z[k] >= end - k) {
          verdict.witness = RepetitionWitness{a, power, Word(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(k)),
                                              end / k};
          verdict.period_bound = bound;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

std::vector<OmegaCandidate> omega_candidates(Analyzer& analyzer, std::size_t max_length, std::size_t power) {
  if (max_length == 0 || power == 0) throw PreconditionError("length and power must be at least 1");
  const auto unbounded = unbounded_letters(analyzer.morphism());
  const auto& lang = analyzer.language(max_length * power);
  std::vector<OmegaCandidate> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const Word& v : lang.of_length(len)) {
      if (!is_primitive(v) || !lang.contains(df0l::power(v, power))) continue;
      const bool grows = std::any_of(v.begin(), v.end(), [&](Letter a) { return unbounded[a]; });
      out.push_back({v, power, grows});
    }
  }
  return out;
}

PreimagePower find_power_in_preimage(const Morphism& psi, WordView z, WordView v, std::size_t repeats) {
  if (repeats < 2) throw PreconditionError("the repetition count must be at least 2");
  if (!is_primitive(v)) throw PreconditionError("v must be a non-empty primitive word");

  std::unordered_map<Word, Word, WordHash> preimage_of;
  for (const Word& f : factors(z, z.size())) {
    if (f.empty()) continue;
    auto [it, inserted] = preimage_of.emplace(psi.apply(f), f);
    if (!inserted && it->second != f) {
      throw PreconditionError("the morphism is not injective on the factors of z");
    }
  }

  const Word image = psi.apply(z);
  std::optional<Word> aligned;
  for (std::size_t shift = 0; shift < v.size() && !aligned; ++shift) {
    Word rotated = rotate(v, shift);
    if (is_prefix(image, power(rotated, image.size() / v.size() + 1))) aligned = std::move(rotated);
  }
  if (!aligned) throw PreconditionError("the image of z is not a factor of a power of v");

  // Prefix q_j of z has |ψ(q_j)| = k(j)|v| + i(j); collect the first residue
  // class i that is hit repeats + 1 times.
  std::vector<std::vector<std::size_t>> by_residue(v.size());
  std::vector<std::size_t> hits;
  std::size_t length = 0;
  for (std::size_t j = 0; j <= z.size(); ++j) {
    auto& cls = by_residue[length % v.size()];
    cls.push_back(j);
    if (cls.size() == repeats + 1) {
      hits = cls;
      break;
    }
    if (j < z.size()) length += psi.image(z[j]).size();
  }
  if (hits.empty()) throw PreconditionError("z is too short for the pigeonhole argument");

  const WordView span_word = z.subspan(hits.front(), hits.back() - hits.front());
  const WordView first_block = z.subspan(hits[0], hits[1] - hits[0]);
  Word root = primitive_root(first_block).root;
  if (span_word.size() % root.size() != 0 || !std::equal(span_word.begin(), span_word.end(),
                                                         power(root, span_word.size() / root.size()).begin())) {
    throw PreconditionError("blocks between aligned prefixes do not share a primitive root");
  }
  const Word image_root = primitive_root(psi.apply(root)).root;
  if (!is_conjugate(image_root, v)) {
    throw PreconditionError("the image of the recovered root is not conjugate to v");
  }
  const std::size_t exponent = span_word.size() / root.size();
  return {std::move(root), exponent};
}

std::optional<Word> lift_repetition(Analyzer& analyzer, WordView v, std::size_t search_length,
                                    std::size_t min_power) {
  if (!is_primitive(v)) throw PreconditionError("v must be a non-empty primitive word");
  analyzer.require_member(v);
  const auto& lang = analyzer.language(std::max<std::size_t>(search_length * min_power, 1));
  const Morphism& m = analyzer.morphism();
  for (std::size_t len = 1; len <= search_length; ++len) {
    for (const Word& u : lang.of_length(len)) {
      if (m.image_length(u) % v.size() != 0 || !is_primitive(u)) continue;
      const Word root = primitive_root(m.apply(u)).root;
      if (is_conjugate(root, v) && lang.contains(power(u, min_power))) return u;
    }
  }
  return std::nullopt;
}

}  // namespace df0l
