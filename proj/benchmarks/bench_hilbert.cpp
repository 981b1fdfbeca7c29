#include <hilbert/analysis.hpp>
#include <hilbert/constructions.hpp>
#include <hilbert/engine.hpp>

#include <benchmark/benchmark.h>

using namespace hilbert;

namespace {

ConstructionSpec theorem1(unsigned d, unsigned p) { return {Variant::kTheorem1, d, p, 0, series::Partition{}}; }

void BM_ClosedForm(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto spec = theorem1(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form(spec, order));
}
BENCHMARK(BM_ClosedForm)->Arg(25)->Arg(100)->Arg(400);

void BM_StructuredCount(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto spec = theorem1(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(structured_count(spec, order));
}
BENCHMARK(BM_StructuredCount)->Arg(25)->Arg(100);

void BM_CountAutomaton(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto spec = theorem1(static_cast<unsigned>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_automaton(make_presentation(spec, order - 2), order));
}
BENCHMARK(BM_CountAutomaton)->Args({8, 2})->Args({12, 2})->Args({12, 3})->Args({14, 2})->Unit(benchmark::kMillisecond);

void BM_CountBruteForce(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto pres = make_presentation(theorem1(2, 2), order - 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(pres, order));
}
BENCHMARK(BM_CountBruteForce)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Rationalize(benchmark::State& state) {
  // forbid the d + 1 words x_i^2 and y y y: a star of small loops
  const auto d = static_cast<unsigned>(state.range(0));
  const Alphabet ab{d, true};
  std::vector<Word> words;
  for (Letter i = 0; i < d; ++i) words.push_back({i, i});
  words.push_back({ab.y(), ab.y(), ab.y()});
  const auto pres = Presentation::finite(ab, words);
  for (auto _ : state) benchmark::DoNotOptimize(rationalize(pres));
}
BENCHMARK(BM_Rationalize)->Arg(2)->Arg(4)->Arg(8);

void BM_DetectRecurrence(benchmark::State& state) {
  const auto coeffs = generate(series::Multiplicative{}, static_cast<std::size_t>(state.range(0))).coeffs();
  for (auto _ : state) benchmark::DoNotOptimize(detect_recurrence(coeffs, 12, 20));
}
BENCHMARK(BM_DetectRecurrence)->Arg(99)->Arg(299)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(series::Partition{}, order));
}
BENCHMARK(BM_Partition)->Arg(500)->Arg(2000);

void BM_GkEstimate(benchmark::State& state) {
  const ConstructionSpec spec{Variant::kTheorem14, 2, 2, 0, zero_series()};
  for (auto _ : state) benchmark::DoNotOptimize(gk_estimate(closed_form(spec, 2000)));
}
BENCHMARK(BM_GkEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
