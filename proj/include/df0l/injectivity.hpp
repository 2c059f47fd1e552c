#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "df0l/analyzer.hpp"
#include "df0l/morphism.hpp"
#include "df0l/system.hpp"

namespace df0l {

/// {u, v} ⊆ L(S) with u ≠ v and φ(u) = φ(v); first precedes second canonically.
struct CollisionPair {
  Word first;
  Word second;

  bool operator==(const CollisionPair&) const = default;
};

/// All collisions among non-empty words of L(S) of length <= max_length,
/// sorted canonically. Only this slice of Δ_S is ever claimed complete.
std::vector<CollisionPair> collisions_upto(Analyzer& analyzer, std::size_t max_length);

struct DeltaEstimate {
  std::size_t lower_bound = 0;  // max |φ(u)| over the collisions found
  std::size_t pairs_found = 0;
};

DeltaEstimate delta_estimate(Analyzer& analyzer, std::size_t max_length);

struct CollisionFamilyResult {
  bool holds = true;
  std::size_t checked = 0;
  std::string failure;
};

/// Checks the family u_{k+1} = u_1 φ(u_k), v_{k+1} = v_1 φ(v_k) for
/// k <= n: u_k ≠ v_k, φ(u_k) = φ(v_k), and u_k, v_k ∈ L(S).
CollisionFamilyResult collision_family_check(Analyzer& analyzer, WordView first_seed, WordView second_seed,
                                             std::size_t n);

/// φ over A, ψ over B, α: A* -> B*, β: B* -> A*.
struct TwinedData {
  Morphism phi;
  Morphism psi;
  Morphism alpha;
  Morphism beta;
};

struct TwinedCheck {
  bool holds = true;
  std::string failure;
};

/// β∘α = φ and α∘β = ψ, letter by letter.
TwinedCheck verify_twined(const TwinedData& data);

/// α∘φ^k = ψ^k∘α on the source samples and φ^k∘β = β∘ψ^k on the target
/// samples.
TwinedCheck twined_commutation_check(const TwinedData& data, std::size_t k, std::span<const Word> source_samples,
                                     std::span<const Word> target_samples);

/// α(L(S)) ⊆ L(T) and β(L(T)) ⊆ L(S), checked on words up to max_length.
bool simplification_language_check(const System& source, const System& target, const Morphism& alpha,
                                   const Morphism& beta, std::size_t max_length);

}  // namespace df0l
