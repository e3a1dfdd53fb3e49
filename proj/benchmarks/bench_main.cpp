#include <benchmark/benchmark.h>

#include <random>

#include "grt/ihara.hpp"
#include "grt/linalg.hpp"
#include "grt/lyndon.hpp"
#include "grt/malcev.hpp"
#include "grt/parse.hpp"

using namespace grt;

static void BM_LyndonWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ab = GradedAlphabet::xy();
  for (auto _ : state) benchmark::DoNotOptimize(lyndon_words(*ab, n));
  state.SetLabel(std::to_string(lyndon_words(*ab, n).size()) + " words");
}
BENCHMARK(BM_LyndonWords)->DenseRange(8, 16, 4);

static void BM_WeightedWitt(benchmark::State& state) {
  std::vector<int> gens;
  for (int d = 3; d <= 60; d += 2) gens.push_back(d);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_witt_dims(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WeightedWitt)->Arg(20)->Arg(60);

// Products of random degree-n/2 elements; structure constants are warm after
// the first iteration.
static void BM_Bracket(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  auto ab = GradedAlphabet::xy();
  std::mt19937_64 rng(1);
  auto words = lyndon_words(*ab, half);
  LieElement a(ab), b(ab);
  for (const auto& w : words) {
    a.add_term(w, Rational(static_cast<long>(rng() % 7) - 3));
    b.add_term(w, Rational(static_cast<long>(rng() % 7) - 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_Bracket)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_StableSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stable_derivation_system(n));
}
BENCHMARK(BM_StableSystem)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_StableDimensionMod(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stable_dimension_mod(n, 1000003));
}
BENCHMARK(BM_StableDimensionMod)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Congruence691(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ihara_691_congruence(691));
}
BENCHMARK(BM_Congruence691)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Bch(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  auto ab = GradedAlphabet::xy();
  NilpotentElement a(parse_lie("x + 2*[x,y]", ab), c), b(parse_lie("y - [x,[x,y]]", ab), c);
  for (auto _ : state) benchmark::DoNotOptimize(bch(a, b));
}
BENCHMARK(BM_Bch)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
