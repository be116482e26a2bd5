// Hot paths: FFT star product, the plain FFTs, the dense L_f matrix and
// products in the twisted group algebra.

#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "moyal/fft.hpp"
#include "moyal/random.hpp"
#include "moyal/representation.hpp"
#include "moyal/star.hpp"
#include "moyal/weyl_algebra.hpp"

using namespace moyal;

namespace {

GridFunction bump(const GridSpec& spec, double shift) {
  return GridFunction::sample(spec, [shift](std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += (xi - shift) * (xi - shift);
    return std::exp(-std::numbers::pi * r2) * unit_phase(0.3 * x[0]);
  });
}

void BM_StarProduct(benchmark::State& state) {
  const GridSpec spec{2, static_cast<int>(state.range(0)), 8.0, 1.0};
  const GridFunction f = bump(spec, 0.2);
  const GridFunction g = bump(spec, -0.1);
  const SkewForm sigma = standard_skew(2);
  for (auto _ : state) benchmark::DoNotOptimize(star_product(f, g, sigma));
}
BENCHMARK(BM_StarProduct)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FftRoundTrip(benchmark::State& state) {
  const GridSpec spec{2, static_cast<int>(state.range(0)), 8.0, 1.0};
  const GridFunction f = bump(spec, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(fft_inverse(fft_forward(f)));
}
BENCHMARK(BM_FftRoundTrip)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_LeftRegularMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GridSpec spec{2, n, std::sqrt(static_cast<double>(n)), 1.0};
  const GridFunction f = bump(spec, 0.1);
  const SkewForm sigma = standard_skew(2);
  for (auto _ : state) benchmark::DoNotOptimize(build_left_regular_matrix(f, sigma));
}
BENCHMARK(BM_LeftRegularMatrix)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_WeylMul(benchmark::State& state) {
  const SkewForm sigma = standard_skew(4);
  Rng rng(7);
  auto element = [&] {
    WeylElement a(sigma);
    for (int t = 0; t < state.range(0); ++t) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v(i) = rng.uniform(-1.0, 1.0);
      a.add_term(CovectorKey::from(Covector(v)), Complex{rng.uniform(), rng.uniform()});
    }
    return a;
  };
  const WeylElement a = element();
  const WeylElement b = element();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_WeylMul)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
