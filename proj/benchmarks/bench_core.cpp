#include <benchmark/benchmark.h>

#include <random>

#include "ditkin/approx_identity.hpp"
#include "ditkin/classifier.hpp"

using namespace ditkin;

namespace {

WeightFamily odd_even_family() { return dyadic_counterexample().weights; }

Element random_element(Index len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  std::vector<Rational> prefix(len);
  for (auto& v : prefix) v = Rational(num(rng), den(rng));
  return Element::eventually_constant(std::move(prefix), Rational(0));
}

void BM_ExactNorm(benchmark::State& state) {
  const Element f = random_element(static_cast<Index>(state.range(0)), 7);
  const WeightFamily w = odd_even_family();
  for (auto _ : state) benchmark::DoNotOptimize(norm(f, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactNorm)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ResidualFormula(benchmark::State& state) {
  const Element f = random_element(static_cast<Index>(state.range(0)), 11);
  const WeightFamily w = WeightFamily::linear(1, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(residual_norm(f, w, 5));
}
BENCHMARK(BM_ResidualFormula)->Arg(64)->Arg(1024);

void BM_ResidualOracle(benchmark::State& state) {
  const Element f = random_element(static_cast<Index>(state.range(0)), 11);
  const WeightFamily w = WeightFamily::linear(1, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(residual_oracle(f, w, 5));
}
BENCHMARK(BM_ResidualOracle)->Arg(64)->Arg(1024);

void BM_DyadicResidualInterval(benchmark::State& state) {
  const auto [w, f] = dyadic_counterexample();
  const EvalOptions options{static_cast<Index>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(residual_norm(f, w, 1023, options));
}
BENCHMARK(BM_DyadicResidualInterval)->RangeMultiplier(8)->Range(64, 1 << 15);

void BM_TailInfimum(benchmark::State& state) {
  const WeightFamily w = WeightFamily::prefixed(
      {Rational(9), Rational(4)},
      WeightFamily::interleave({WeightFamily::linear(3, 1), WeightFamily::constant(Rational(7, 2)),
                                WeightFamily::interleave({WeightFamily::constant(5), WeightFamily::linear(0, 2)})}));
  Index n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_infimum(w, n));
    n = n % 100000 + 97;
  }
}
BENCHMARK(BM_TailInfimum);

void BM_PropertyReport(benchmark::State& state) {
  const WeightFamily w = strong_ditkin_without_dales(WeightFamily::linear(5, 3), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(property_report(w));
}
BENCHMARK(BM_PropertyReport);

void BM_DitkinDyadic(benchmark::State& state) {
  const auto [w, f] = dyadic_counterexample();
  const Rational tol(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ditkin_approximation(f, w, tol));
}
BENCHMARK(BM_DitkinDyadic)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
