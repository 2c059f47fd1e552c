#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "df0l/execution.hpp"
#include "df0l/interpretations.hpp"
#include "df0l/morphism.hpp"
#include "df0l/word.hpp"

// Data-parallel inner loops. Each kernel has a serial reference version and
// an OpenMP version; the dispatching overload picks one by Execution.
namespace df0l::kernels {

enum class PairStatus : unsigned char { not_admissible, strongly_synchronizing, failing };

/// Windows (see append_windows) of φ(v) for every v in the frontier, in
/// frontier order.
std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length, Execution execution);

/// For each word: 1 if it is not weakly synchronized, else 0.
std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index,
                                            std::span<const Word> words, Execution execution);

/// Status of the pair (u[0..cut), u[cut..)) for each word u.
std::vector<PairStatus> strong_level_status(const InterpretationIndex& index,
                                            std::span<const Word> words, std::size_t cut,
                                            Execution execution);

namespace serial {
std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length);
std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index, std::span<const Word> words);
std::vector<PairStatus> strong_level_status(const InterpretationIndex& index, std::span<const Word> words,
                                            std::size_t cut);
}  // namespace serial

namespace omp {
std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length);
std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index, std::span<const Word> words);
std::vector<PairStatus> strong_level_status(const InterpretationIndex& index, std::span<const Word> words,
                                            std::size_t cut);
}  // namespace omp

}  // namespace df0l::kernels
