#include <benchmark/benchmark.h>

#include "sgr/grassmann.hpp"
#include "sgr/simplex.hpp"
#include "sgr/tableaux.hpp"
#include "verify.hpp"

namespace {

using namespace sgr;

void BM_CursorWalk(benchmark::State& state) {
  const DilatedSimplex s(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) {
    LatticePointCursor cur(s);
    std::size_t n = 0;
    do {
      ++n;
    } while (cur.advance());
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CursorWalk)->Arg(3)->Arg(5)->Arg(7);

void BM_SliceCounts(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const DilatedSimplex s(d, 10);
  const auto w = WeightVector::staircase(d);
  for (auto _ : state) benchmark::DoNotOptimize(slice_counts(s, w));
}
BENCHMARK(BM_SliceCounts)->Arg(3)->Arg(5)->Arg(7);

void BM_GaussianBinomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(n, n));
}
BENCHMARK(BM_GaussianBinomial)->Arg(5)->Arg(10)->Arg(20);

void BM_CharacterEvaluate(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<BigInt> x;
  for (std::size_t i = 0; i < d; ++i) x.emplace_back(i + 2);
  for (auto _ : state) benchmark::DoNotOptimize(character_evaluate(d, 30, x));
}
BENCHMARK(BM_CharacterEvaluate)->Arg(4)->Arg(16);

void BM_SeriesReciprocal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dilation_generating_series(5, n, n));
}
BENCHMARK(BM_SeriesReciprocal)->Arg(10)->Arg(30);

void BM_Verify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_verification({4, 5, std::nullopt}));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
