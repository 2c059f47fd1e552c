#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "df0l/execution.hpp"
#include "df0l/interpretations.hpp"
#include "df0l/language.hpp"
#include "df0l/system.hpp"

namespace df0l {

/// Owns a PDF0L system and caches its factor language and interpretation
/// indexes as analyses request longer words. Not thread-safe; kernels only
/// read from caches that were built before they start.
class Analyzer {
 public:
  /// Throws PreconditionError for invalid or erasing systems.
  explicit Analyzer(System system, Execution execution = Execution::parallel);

  const System& system() const { return system_; }
  const Morphism& morphism() const { return system_.morphism(); }
  ImageLengthBounds bounds() const { return bounds_; }
  Execution execution() const { return execution_; }

  /// A FactorSet reaching at least max_length.
  const FactorSet& language(std::size_t max_length);

  bool contains(WordView u);
  /// Throws PreconditionError if u ∉ L(S).
  void require_member(WordView u);

  /// Interpretation index for words of the given length.
  const InterpretationIndex& index(std::size_t word_length);

 private:
  System system_;
  Execution execution_;
  ImageLengthBounds bounds_;
  std::optional<FactorSet> language_;
  std::map<std::size_t, InterpretationIndex> indexes_;
};

}  // namespace df0l
