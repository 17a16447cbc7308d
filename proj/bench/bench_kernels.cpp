// OpenMP kernels against the serial reference on the same inputs.

#include <benchmark/benchmark.h>

#include "cantor/admissibility.hpp"
#include "cantor/automaton.hpp"
#include "cantor/kernels.hpp"

namespace {

using namespace cantor;

const ShiftAutomaton& golden_square_automaton() {
  static const ShiftAutomaton a =
      trim_accessible(build_automaton(quasi_greedy_table(parse_up_base("per:[phi*phi,3+sqrt(5)]"))));
  return a;
}

const ShiftAutomaton& sqrt13_automaton() {
  static const ShiftAutomaton a = trim_accessible(
      build_automaton(quasi_greedy_table(parse_up_base("per:[(1+sqrt(13))/2,(5+sqrt(13))/6]"))));
  return a;
}

const LanguageHandle& two_three() {
  static const LanguageHandle l(parse_up_base("per:[2,3]"));
  return l;
}

std::vector<FiniteWord> all_words(Digit alphabet_max, std::size_t len) {
  std::vector<FiniteWord> out;
  for (std::uint64_t i = 0; i < word_count(alphabet_max, len); ++i) out.push_back(word_at(i, alphabet_max, len));
  return out;
}

template <auto Fn>
void forbidden(benchmark::State& state) {
  const std::size_t len = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(sqrt13_automaton(), len));
}

template <auto Fn>
void factors(benchmark::State& state) {
  const auto words = all_words(5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(golden_square_automaton(), words));
  state.SetItemsProcessed(state.iterations() * words.size());
}

template <auto Fn>
void prefixes(benchmark::State& state) {
  const auto words = all_words(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(two_three(), words, 0));
  state.SetItemsProcessed(state.iterations() * words.size());
}

template <auto Fn>
void disagreements(benchmark::State& state) {
  const ShiftAutomaton& a = golden_square_automaton();
  WordPredicate f = [&](const FiniteWord& w) { return accepts_factor(a, w); };
  WordPredicate g = [&](const FiniteWord& w) { return accepts_factor(a, w); };
  for (auto _ : state) benchmark::DoNotOptimize(Fn(5, state.range(0), f, g, 16));
}

}  // namespace

BENCHMARK(forbidden<reference::forbidden_factors>)->Name("forbidden_factors/serial")->Arg(10)->Arg(14);
BENCHMARK(forbidden<kernels::forbidden_factors>)->Name("forbidden_factors/openmp")->Arg(10)->Arg(14);
BENCHMARK(factors<reference::classify_factors>)->Name("classify_factors/serial")->Arg(6);
BENCHMARK(factors<kernels::classify_factors>)->Name("classify_factors/openmp")->Arg(6);
BENCHMARK(prefixes<reference::classify_prefixes>)->Name("classify_prefixes/serial")->Arg(8);
BENCHMARK(prefixes<kernels::classify_prefixes>)->Name("classify_prefixes/openmp")->Arg(8);
BENCHMARK(disagreements<reference::disagreements>)->Name("disagreements/serial")->Arg(6);
BENCHMARK(disagreements<kernels::disagreements>)->Name("disagreements/openmp")->Arg(6);

BENCHMARK_MAIN();
