#include "efimov/potential.hpp"
#include "efimov/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace sp = efimov::spectrum;

namespace {

const sp::MassConfig kMass = sp::MassConfig::from_ratio(20.0);

}  // namespace

static void NumericLevels(benchmark::State& state) {
  sp::NumericOptions o;
  o.count = static_cast<int>(state.range(0));
  const auto pot = sp::PotentialSpec::nonlocal_unitary();
  for (auto _ : state) benchmark::DoNotOptimize(sp::numeric_spectrum(pot, kMass, 0, o));
}
BENCHMARK(NumericLevels)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void CountBoundStates(benchmark::State& state) {
  const auto pot = sp::PotentialSpec::nonlocal_unitary();
  for (auto _ : state) benchmark::DoNotOptimize(sp::count_bound_states(pot, kMass, 0, -1e-6));
}
BENCHMARK(CountBoundStates)->Unit(benchmark::kMicrosecond);

static void MatchingLevels(benchmark::State& state) {
  const double r0 = 3.33;
  const double lambda = -5.0 * kMass.eps2() / (r0 * r0);
  for (auto _ : state) benchmark::DoNotOptimize(sp::matching_levels(kMass, 0, 5, r0, lambda));
}
BENCHMARK(MatchingLevels)->Unit(benchmark::kMicrosecond);

static void MatchingFunction(benchmark::State& state) {
  const double r0 = 1.0;
  const double lambda = -20.0 * kMass.eps2();
  for (auto _ : state) benchmark::DoNotOptimize(sp::matching_function(kMass, 0, r0, lambda, 1e-3));
}
BENCHMARK(MatchingFunction);

BENCHMARK_MAIN();
