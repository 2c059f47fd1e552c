// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "df0l/analyzer.hpp"
#include "df0l/circularity.hpp"
#include "df0l/language.hpp"
#include "df0l/system_file.hpp"

using namespace df0l;

namespace {

System non_eventually_injective() {
  return parse_system("alphabet: a b c\nmap a -> a b a c a\nmap b -> a b a\nmap c -> a b a\naxiom: a\n");
}

// Four letters, dense language.
System dense() {
  return parse_system(
      "alphabet: a b c d\nmap a -> a b c\nmap b -> d a\nmap c -> c b d a\nmap d -> b c\naxiom: a\n");
}

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_FactorLanguage(benchmark::State& state) {
  const System s = dense();
  const auto length = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(factor_language(s, length, mode(state)).size());
}

void BM_WeakThreshold(benchmark::State& state) {
  const System s = power_system(non_eventually_injective(), 2);
  for (auto _ : state) {
    Analyzer analyzer(s, mode(state));
    benchmark::DoNotOptimize(weak_threshold(analyzer).threshold);
  }
}

void BM_StrongThreshold(benchmark::State& state) {
  const System s = non_eventually_injective();
  ThresholdOptions options;
  options.repetition_check = false;
  for (auto _ : state) {
    Analyzer analyzer(s, mode(state));
    benchmark::DoNotOptimize(strong_threshold(analyzer, options).threshold);
  }
}

}  // namespace

BENCHMARK(BM_FactorLanguage)->ArgsProduct({{0, 1}, {12, 16}})->ArgNames({"parallel", "L"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeakThreshold)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrongThreshold)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
