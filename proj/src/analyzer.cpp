#include "df0l/analyzer.hpp"

#include <algorithm>

#include "df0l/error.hpp"

namespace df0l {

Analyzer::Analyzer(System system, Execution execution)
    : system_(std::move(system)), execution_(execution), bounds_{} {
  require_propagating(system_);
  bounds_ = image_length_bounds(system_.morphism());
}

const FactorSet& Analyzer::language(std::size_t max_length) {
  if (!language_ || language_->max_length() < max_length) {
    // Rebuilding at exactly the requested length: overshooting costs a factor
    // of the factor complexity per extra level, which dwarfs the rebuilds.
    language_.emplace(factor_language(system_, max_length, execution_));
  }
  return *language_;
}

bool Analyzer::contains(WordView u) { return language(u.size()).contains(u); }

void Analyzer::require_member(WordView u) {
  if (!contains(u)) {
    throw PreconditionError("word '" + system_.alphabet().render(u) + "' is not in the language");
  }
}

const InterpretationIndex& Analyzer::index(std::size_t word_length) {
  auto it = indexes_.find(word_length);
  if (it == indexes_.end()) {
    const auto& lang = language(std::max(word_length, preimage_length_bound(word_length, bounds_)));
    it = indexes_.emplace(word_length, InterpretationIndex(system_.morphism(), lang, word_length)).first;
  }
  return it->second;
}

}  // namespace df0l
