#include "df0l/system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "df0l/error.hpp"

namespace df0l {

namespace {

using Mask = std::vector<bool>;

void require_non_erasing(const Morphism& m) {
  if (!m.is_endomorphism()) throw PreconditionError("expected an endomorphism");
  if (!m.is_non_erasing()) throw PreconditionError("morphism is erasing; only PDF0L systems are supported");
}

Mask unite(const Mask& lhs, const Mask& rhs) {
  Mask out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = lhs[i] || rhs[i];
  return out;
}

LetterSet to_letters(const Mask& mask) {
  LetterSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<Letter>(i));
  }
  return out;
}

bool is_subset(const Mask& lhs, const Mask& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] && !rhs[i]) return false;
  }
  return true;
}

// alph(φ^{k+1}(a)) = ⋃_{b ∈ alph(φ^k(a))} alph(φ(b))
std::vector<Mask> step_alphabets(const std::vector<Mask>& current, const std::vector<Mask>& one_step) {
  std::vector<Mask> next(current.size(), Mask(current.size(), false));
  for (std::size_t a = 0; a < current.size(); ++a) {
    for (std::size_t b = 0; b < current.size(); ++b) {
      if (current[a][b]) next[a] = unite(next[a], one_step[b]);
    }
  }
  return next;
}

std::vector<Mask> identity_alphabets(std::size_t n) {
  std::vector<Mask> out(n, Mask(n, false));
  for (std::size_t a = 0; a < n; ++a) out[a][a] = true;
  return out;
}

std::vector<Mask> one_step_alphabets(const Morphism& m) {
  std::vector<Mask> out;
  for (const Word& img : m.images()) out.push_back(letters_of(img, m.domain().size()));
  return out;
}

}  // namespace

System::System(Morphism morphism, std::vector<Word> axioms) : morphism_(std::move(morphism)) {
  std::set<Word, CanonicalLess> unique(axioms.begin(), axioms.end());
  axioms_.assign(unique.begin(), unique.end());
}

ValidationReport validate(const System& system) {
  ValidationReport report;
  report.propagating = system.is_propagating();
  if (!system.morphism().is_endomorphism()) {
    report.errors.emplace_back("morphism must map the alphabet into itself");
  }
  if (system.axioms().empty()) report.errors.emplace_back("axiom set is empty");
  for (const Word& w : system.axioms()) {
    if (w.empty()) report.errors.emplace_back("axioms must be non-empty words");
  }
  report.valid = report.errors.empty();
  return report;
}

void require_propagating(const System& system) {
  const auto report = validate(system);
  if (!report.valid) throw PreconditionError("invalid system: " + report.errors.front());
  if (!report.propagating) {
    throw PreconditionError("morphism is erasing; only PDF0L systems are supported");
  }
}

System power_system(const System& system, std::size_t k) {
  if (k == 0) throw PreconditionError("power must be at least 1");
  std::vector<Word> axioms;
  for (const Word& w : system.axioms()) {
    Word current = w;
    for (std::size_t i = 0; i < k; ++i) {
      axioms.push_back(current);
      if (i + 1 < k) current = system.morphism().apply(current);
    }
  }
  return System(system.morphism().power(k), std::move(axioms));
}

std::vector<bool> unbounded_letters(const Morphism& m) {
  require_non_erasing(m);
  const std::size_t n = m.domain().size();
  const auto successors = one_step_alphabets(m);

  // reach[a][c]: c reachable from a in one or more steps.
  std::vector<Mask> reach(n, Mask(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> stack;
    for (std::size_t b = 0; b < n; ++b) {
      if (successors[a][b]) {
        reach[a][b] = true;
        stack.push_back(b);
      }
    }
    while (!stack.empty()) {
      const std::size_t b = stack.back();
      stack.pop_back();
      for (std::size_t c = 0; c < n; ++c) {
        if (successors[b][c] && !reach[a][c]) {
          reach[a][c] = true;
          stack.push_back(c);
        }
      }
    }
  }

  Mask growing(n, false);
  for (std::size_t c = 0; c < n; ++c) growing[c] = reach[c][c] && m.image(static_cast<Letter>(c)).size() >= 2;

  Mask unbounded(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    unbounded[a] = growing[a];
    for (std::size_t c = 0; c < n && !unbounded[a]; ++c) unbounded[a] = reach[a][c] && growing[c];
  }
  return unbounded;
}

std::vector<std::vector<bool>> iterated_alphabets(const Morphism& m, std::size_t k) {
  const auto one_step = one_step_alphabets(m);
  auto current = identity_alphabets(m.domain().size());
  for (std::size_t i = 0; i < k; ++i) current = step_alphabets(current, one_step);
  return current;
}

std::size_t invariant_exponent(const Morphism& m) {
  require_non_erasing(m);
  const auto one_step = one_step_alphabets(m);
  std::map<std::vector<Mask>, std::size_t> seen;
  auto current = identity_alphabets(m.domain().size());
  std::size_t k = 0;
  while (true) {
    auto [it, inserted] = seen.emplace(current, k);
    if (!inserted) {
      const std::size_t preperiod = it->second;
      const std::size_t period = k - preperiod;
      const std::size_t floor = std::max<std::size_t>(preperiod, 1);
      return ((floor + period - 1) / period) * period;
    }
    current = step_alphabets(current, one_step);
    ++k;
  }
}

std::vector<LetterSet> minimal_invariant_subalphabets(const Morphism& m, std::size_t p) {
  const auto unbounded = unbounded_letters(m);
  const auto images = iterated_alphabets(m, p);
  const std::size_t n = m.domain().size();

  std::set<Mask> candidates;
  for (std::size_t g = 0; g < n; ++g) {
    if (unbounded[g]) candidates.insert(images[g]);
  }

  std::vector<Mask> invariant;
  for (const Mask& b : candidates) {
    Mask closure(n, false);
    bool has_unbounded = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!b[a]) continue;
      closure = unite(closure, images[a]);
      has_unbounded = has_unbounded || unbounded[a];
    }
    if (has_unbounded && closure == b) invariant.push_back(b);
  }

  std::vector<LetterSet> minimal;
  for (const Mask& b : invariant) {
    const bool has_smaller = std::any_of(invariant.begin(), invariant.end(), [&](const Mask& other) {
      return other != b && is_subset(other, b);
    });
    if (!has_smaller) minimal.push_back(to_letters(b));
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

GrowthReport classify_letters(const Morphism& m) {
  GrowthReport report;
  const auto unbounded = unbounded_letters(m);
  for (std::size_t a = 0; a < unbounded.size(); ++a) {
    (unbounded[a] ? report.unbounded : report.bounded).push_back(static_cast<Letter>(a));
  }
  report.invariant_exponent = invariant_exponent(m);
  report.minimal_invariant_subalphabets = minimal_invariant_subalphabets(m, report.invariant_exponent);
  return report;
}

}  // namespace df0l
