#include <benchmark/benchmark.h>

#include "sails/criterion.hpp"
#include "sails/geometry.hpp"
#include "sails/survey.hpp"

using namespace sails;

namespace {

// sqrt(n) for nonsquare n has period length growing roughly like sqrt(n).
void BM_ExpandSqrt(benchmark::State& state) {
  const auto x = QuadraticSurd::make(0, 1, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(x));
}
BENCHMARK(BM_ExpandSqrt)->Arg(2)->Arg(94)->Arg(991)->Arg(9949)->Arg(99991);

void BM_ValueOfExpansion(benchmark::State& state) {
  const auto cf = expand(QuadraticSurd::make(0, 1, 1, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(value(cf));
}
BENCHMARK(BM_ValueOfExpansion)->Arg(94)->Arg(991)->Arg(9949);

void BM_Classify(benchmark::State& state) {
  const auto x = QuadraticSurd::make(0, 1, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(x));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(94)->Arg(991);

void BM_SerretEquivalent(benchmark::State& state) {
  const auto x = QuadraticSurd::make(0, 1, 1, state.range(0));
  const auto y = QuadraticSurd::make(17, 3, 5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serret_equivalent(x, y));
}
BENCHMARK(BM_SerretEquivalent)->Arg(94)->Arg(991);

void BM_LagrangeAutomorphism(benchmark::State& state) {
  const QuadraticForm f = form_from_polynomial(1, 0, -state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_automorphism(f));
}
BENCHMARK(BM_LagrangeAutomorphism)->Arg(2)->Arg(94)->Arg(991);

void BM_SailChain(benchmark::State& state) {
  const auto x = QuadraticSurd::make(1, 1, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(chain_from_surd(x, {-2, state.range(0)}));
}
BENCHMARK(BM_SailChain)->Arg(20)->Arg(200);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(state.range(0), 1));
}
BENCHMARK(BM_Survey)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
