#include "df0l/kernels.hpp"

#include "df0l/language.hpp"

namespace df0l::kernels {

namespace {

PairStatus classify_pair(const InterpretationIndex& index, const Word& u, std::size_t cut) {
  const auto occ = index.find(u);
  if (!index.compatible_with_any(occ, cut)) return PairStatus::not_admissible;
  return index.common_split_letter(occ, cut) ? PairStatus::strongly_synchronizing : PairStatus::failing;
}

}  // namespace

namespace serial {

std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length) {
  std::vector<Word> out;
  for (const Word& v : frontier) append_windows(morphism.apply(v), max_length, out);
  return out;
}

std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index, std::span<const Word> words) {
  std::vector<unsigned char> flags(words.size(), 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    flags[i] = index.synchronizing_cut(index.find(words[i])) ? 0 : 1;
  }
  return flags;
}

std::vector<PairStatus> strong_level_status(const InterpretationIndex& index, std::span<const Word> words,
                                            std::size_t cut) {
  std::vector<PairStatus> status(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) status[i] = classify_pair(index, words[i], cut);
  return status;
}

}  // namespace serial

namespace omp {

std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length) {
  // per-item buffers keep the output in frontier order
  std::vector<std::vector<Word>> buffers(frontier.size());
  const auto n = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    append_windows(morphism.apply(frontier[static_cast<std::size_t>(i)]), max_length,
                   buffers[static_cast<std::size_t>(i)]);
  }
  std::vector<Word> out;
  for (auto& buffer : buffers) {
    for (auto& w : buffer) out.push_back(std::move(w));
  }
  return out;
}

std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index, std::span<const Word> words) {
  std::vector<unsigned char> flags(words.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    flags[k] = index.synchronizing_cut(index.find(words[k])) ? 0 : 1;
  }
  return flags;
}

std::vector<PairStatus> strong_level_status(const InterpretationIndex& index, std::span<const Word> words,
                                            std::size_t cut) {
  std::vector<PairStatus> status(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    status[k] = classify_pair(index, words[k], cut);
  }
  return status;
}

}  // namespace omp

std::vector<Word> expand_windows(const Morphism& morphism, std::span<const Word> frontier,
                                 std::size_t max_length, Execution execution) {
  return execution == Execution::parallel ? omp::expand_windows(morphism, frontier, max_length)
                                          : serial::expand_windows(morphism, frontier, max_length);
}

std::vector<unsigned char> weak_level_flags(const InterpretationIndex& index, std::span<const Word> words,
                                            Execution execution) {
  return execution == Execution::parallel ? omp::weak_level_flags(index, words)
                                          : serial::weak_level_flags(index, words);
}

std::vector<PairStatus> strong_level_status(const InterpretationIndex& index, std::span<const Word> words,
                                            std::size_t cut, Execution execution) {
  return execution == Execution::parallel ? omp::strong_level_status(index, words, cut)
                                          : serial::strong_level_status(index, words, cut);
}

}  // namespace df0l::kernels
