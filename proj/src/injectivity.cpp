#include "df0l/injectivity.hpp"

#include <algorithm>
#include <unordered_map>

#include "df0l/error.hpp"
#include "df0l/language.hpp"

namespace df0l {

std::vector<CollisionPair> collisions_upto(Analyzer& analyzer, std::size_t max_length) {
  if (max_length == 0) throw PreconditionError("length bound must be at least 1");
  const Morphism& m = analyzer.morphism();
  const FactorSet& lang = analyzer.language(max_length);

  std::unordered_map<Word, std::vector<const Word*>, WordHash> by_image;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const Word& w : lang.of_length(len)) by_image[m.apply(w)].push_back(&w);
  }

  std::vector<CollisionPair> out;
  for (const auto& [image, group] : by_image) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const Word& u = *group[i];
        const Word& v = *group[j];
        out.push_back(CanonicalLess{}(u, v) ? CollisionPair{u, v} : CollisionPair{v, u});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CollisionPair& lhs, const CollisionPair& rhs) {
    if (lhs.first != rhs.first) return CanonicalLess{}(lhs.first, rhs.first);
    return CanonicalLess{}(lhs.second, rhs.second);
  });
  return out;
}

DeltaEstimate delta_estimate(Analyzer& analyzer, std::size_t max_length) {
  const auto pairs = collisions_upto(analyzer, max_length);
  DeltaEstimate estimate;
  estimate.pairs_found = pairs.size();
  for (const auto& pair : pairs) {
    estimate.lower_bound = std::max(estimate.lower_bound, analyzer.morphism().image_length(pair.first));
  }
  return estimate;
}

CollisionFamilyResult collision_family_check(Analyzer& analyzer, WordView first_seed, WordView second_seed,
                                             std::size_t n) {
  const Morphism& m = analyzer.morphism();
  const Alphabet& alphabet = analyzer.system().alphabet();
  CollisionFamilyResult result;
  Word u(first_seed.begin(), first_seed.end());
  Word v(second_seed.begin(), second_seed.end());
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string label = "member " + std::to_string(k) + ": ";
    const Word image_u = m.apply(u);
    if (u == v) {
      result.failure = label + "the two words coincide";
    } else if (image_u != m.apply(v)) {
      result.failure = label + "images differ";
    } else if (!analyzer.contains(u)) {
      result.failure = label + "'" + alphabet.render(u) + "' is not in the language";
    } else if (!analyzer.contains(v)) {
      result.failure = label + "'" + alphabet.render(v) + "' is not in the language";
    }
    if (!result.failure.empty()) {
      result.holds = false;
      return result;
    }
    result.checked = k;
    if (k < n) {
      u = concat(first_seed, image_u);
      v = concat(second_seed, m.apply(v));
    }
  }
  return result;
}

TwinedCheck verify_twined(const TwinedData& data) {
  const auto& [phi, psi, alpha, beta] = data;
  if (!(alpha.domain() == phi.domain()) || !(alpha.codomain() == psi.domain()) ||
      !(beta.domain() == psi.domain()) || !(beta.codomain() == phi.domain())) {
    return {false, "alphabets of the four morphisms do not match"};
  }
  for (Letter a = 0; a < phi.domain().size(); ++a) {
    if (beta.apply(alpha.image(a)) != phi.image(a)) {
      return {false, "letter '" + phi.domain().token(a) + "': beta(alpha(a)) != phi(a)"};
    }
  }
  for (Letter b = 0; b < psi.domain().size(); ++b) {
    if (alpha.apply(beta.image(b)) != psi.image(b)) {
      return {false, "letter '" + psi.domain().token(b) + "': alpha(beta(b)) != psi(b)"};
    }
  }
  return {};
}

TwinedCheck twined_commutation_check(const TwinedData& data, std::size_t k, std::span<const Word> source_samples,
                                     std::span<const Word> target_samples) {
  const auto& [phi, psi, alpha, beta] = data;
  for (const Word& w : source_samples) {
    if (alpha.apply(phi.apply_power(w, k)) != psi.apply_power(alpha.apply(w), k)) {
      return {false, "alpha . phi^k != psi^k . alpha on '" + phi.domain().render(w) + "'"};
    }
  }
  for (const Word& z : target_samples) {
    if (phi.apply_power(beta.apply(z), k) != beta.apply(psi.apply_power(z, k))) {
      return {false, "phi^k . beta != beta . psi^k on '" + psi.domain().render(z) + "'"};
    }
  }
  return {};
}

bool simplification_language_check(const System& source, const System& target, const Morphism& alpha,
                                   const Morphism& beta, std::size_t max_length) {
  const std::size_t alpha_max = image_length_bounds(alpha).max;
  const std::size_t beta_max = image_length_bounds(beta).max;

  const FactorSet source_words = factor_language(source, max_length);
  const FactorSet target_images = factor_language(target, max_length * alpha_max);
  for (const Word& v : source_words.words()) {
    if (!target_images.contains(alpha.apply(v))) return false;
  }

  const FactorSet target_words = factor_language(target, max_length);
  const FactorSet source_images = factor_language(source, max_length * beta_max);
  for (const Word& z : target_words.words()) {
    if (!source_images.contains(beta.apply(z))) return false;
  }
  return true;
}

}  // namespace df0l
