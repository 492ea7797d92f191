#include <benchmark/benchmark.h>

#include "commat/charmodel.hpp"
#include "commat/oracle.hpp"
#include "commat/series.hpp"

namespace {

using namespace commat;

GradedSpace torus() { return GradedSpace({Stratum{0, 1, 1}, Stratum{1, 1, Rational(1, 2)}}); }

void BM_PolyGcd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Poly a = q_pochhammer(n) * Poly::one_minus(1, 3);
  const Poly b = q_pochhammer(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(12);

void BM_MnCharacterTable(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (const auto& a : parts) {
      for (const auto& b : parts) sum += mn_character(a, b);
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_MnCharacterTable)->Arg(6)->Arg(10);

void BM_EnhancedCharacter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enhanced_character(torus(), n));
}
BENCHMARK(BM_EnhancedCharacter)->Arg(4)->Arg(6)->Arg(8);

void BM_EnhancedCharacterSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enhanced_character_series(torus(), n));
}
BENCHMARK(BM_EnhancedCharacterSeries)->Arg(4)->Arg(6)->Arg(8);

void BM_PoincareCn(benchmark::State& state) {
  const GradedSpace p1 = GradedSpace::from_betti({1, 0, 1});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare(p1, n, Space::Cn));
}
BENCHMARK(BM_PoincareCn)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CohSeries(benchmark::State& state) {
  const GradedSpace gm = GradedSpace::from_betti({1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(coh_series(gm, 5, 20).equal());
}
BENCHMARK(BM_CohSeries)->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  CountOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(PuncturedLine{{0, 1}}, 2, 3, opts));
}
BENCHMARK(BM_CountPoints)->Arg(1)->Arg(4);

void BM_CountCommutingPairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_points(AffineSpace{2}, 2, 3));
}
BENCHMARK(BM_CountCommutingPairs)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
