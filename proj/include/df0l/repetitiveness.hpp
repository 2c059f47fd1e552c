#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "df0l/analyzer.hpp"
#include "df0l/morphism.hpp"
#include "df0l/word.hpp"

namespace df0l {

/// Certificate of unbounded repetitiveness: φ^power(period) = period^exponent,
/// period is primitive, starts with the unbounded letter `letter`, and
/// `letter` ∈ L(S). Then period^k ∈ L(S) for every k.
struct RepetitionWitness {
  Letter letter = 0;
  std::size_t power = 0;
  Word period;
  std::size_t exponent = 0;
};

/// Either a certificate or the bounds within which none was found. A
/// missing witness is never a proof that the system is not repetitive.
struct RepetitivenessVerdict {
  std::optional<RepetitionWitness> witness;
  std::size_t power_bound = 0;
  std::size_t period_bound = 0;

  bool repetitive() const { return witness.has_value(); }
};

/// max(64, ⌈φ⌉^(#A + 1)), saturated at 4096.
std::size_t default_period_bound(const Morphism& m);

/// Scans every unbounded letter a ∈ L(S) and every 1 <= ℓ <= #A with
/// φ^ℓ(a) ∈ aA⁺, testing prefixes u of lim φ^{ℓk}(a) with |u| <= period_bound
/// for φ^ℓ(u) = u^n, n >= 2. The first hit in (a, ℓ, |u|) order wins.
RepetitivenessVerdict detect_unbounded_repetitive(Analyzer& analyzer,
                                                  std::optional<std::size_t> period_bound = std::nullopt);

/// First n letters of lim φ^{ℓk}(a). Throws PreconditionError unless
/// φ^ℓ(a) starts with a and has length at least two.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t power, std::size_t n);

struct OmegaCandidate {
  Word word;
  std::size_t verified_power = 0;
  bool unbounded = false;
};

/// Every primitive v ∈ L(S) with |v| <= max_length and v^power ∈ L(S).
std::vector<OmegaCandidate> omega_candidates(Analyzer& analyzer, std::size_t max_length, std::size_t power);

struct PreimagePower {
  Word root;
  std::size_t exponent = 0;
};

/// Pigeonhole construction on prefix image lengths modulo |v|: given ψ(z) a
/// factor of some power of the primitive word v, finds a primitive u with
/// u^exponent a factor of z, exponent >= repeats, and ρ(ψ(u)) ~ v.
/// ψ must be injective on the factors of z; throws PreconditionError when
/// that or any other requirement fails.
PreimagePower find_power_in_preimage(const Morphism& psi, WordView z, WordView v, std::size_t repeats);

/// Shortest (then canonically first) primitive u ∈ L(S), |u| <= search_length,
/// with ρ(φ(u)) ~ v and u^min_power ∈ L(S).
std::optional<Word> lift_repetition(Analyzer& analyzer, WordView v, std::size_t search_length,
                                    std::size_t min_power = 3);

}  // namespace df0l
