#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <benchmark/benchmark.h>

namespace sf = efimov::specfun;
namespace tc = efimov::two_center;

static void LambertW0(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::lambert_w0(x));
    x = x < 1e3 ? x * 1.01 : 0.1;
  }
}
BENCHMARK(LambertW0);

// Small arguments go through the series, larger ones through the recurrence.
static void BesselKImag(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_k_imag(1.7455451860, x));
}
BENCHMARK(BesselKImag)->Arg(1)->Arg(50)->Arg(400);

static void BesselIHalfScaled(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sf::bessel_i_half_scaled(l, 7.5));
}
BENCHMARK(BesselIHalfScaled)->Arg(0)->Arg(4)->Arg(10);

static void EffectiveEigenvalue(benchmark::State& state) {
  double r = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc::effective_eigenvalue(0.5, r));
    r = r < 50.0 ? r * 1.01 : 0.05;
  }
}
BENCHMARK(EffectiveEigenvalue);
