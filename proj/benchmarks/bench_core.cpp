#include <random>

#include <benchmark/benchmark.h>

#include "calderon/cauchy/b_blocks.hpp"
#include "calderon/contour/functional_calculus.hpp"
#include "calderon/grassmann/compare.hpp"
#include "calderon/grassmann/point.hpp"
#include "calderon/grassmann/schatten.hpp"
#include "calderon/symbol/gallery.hpp"

namespace {

using namespace calderon;

void BM_BBlocks(benchmark::State& state) {
  const auto spec = symbol::build_gallery("laplace_mass");
  const auto sym = symbol::mode_symbol(spec, Mode{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(cauchy::b_blocks(sym));
}
BENCHMARK(BM_BBlocks)->Arg(1)->Arg(64)->Arg(1024);

void BM_AssembleDirac3(benchmark::State& state) {
  const auto spec = symbol::build_gallery("dirac3");
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grassmann::assemble_point(spec, cutoff));
}
BENCHMARK(BM_AssembleDirac3)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_CompareDirac2(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const auto a = grassmann::assemble_point(symbol::build_gallery("dirac2"), cutoff);
  const auto b =
      grassmann::assemble_point(symbol::build_gallery("dirac2", {{"v", 0.3}}), cutoff);
  for (auto _ : state) {
    const auto rep = grassmann::compare_points(a, b);
    benchmark::DoNotOptimize(grassmann::schatten_fit(rep, 2, 0, {2.0}));
  }
}
BENCHMARK(BM_CompareDirac2)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Riesz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {nd(rng), nd(rng)};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        contour::riesz_projector(m, [](cdouble z) { return z.real() < 0.0; }));
  }
}
BENCHMARK(BM_Riesz)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
