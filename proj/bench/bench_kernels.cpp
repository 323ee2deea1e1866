#include "hdx/depth.hpp"
#include "hdx/kernels.hpp"
#include "hdx/text.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hdx;

namespace {

std::vector<kernels::Support> random_supports(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<kernels::Support> out;
  for (std::size_t i = 0; i < count; ++i) {
    kernels::Support s(n);
    for (int j = 0; j < 3 + static_cast<int>(rng() % 4); ++j) s.set(rng() % n);
    out.push_back(s);
  }
  return out;
}

void face_counts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool parallel = state.range(1) != 0;
  const auto supports = random_supports(n, 40, 7);
  for (auto _ : state) {
    auto c = parallel ? kernels::face_counts_parallel(n, supports) : kernels::face_counts_serial(n, supports);
    benchmark::DoNotOptimize(c);
  }
  state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(face_counts)->ArgsProduct({{16, 20, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

// Squares of ten variables padded to m = 20: the scan rejects q = 0..3.
void series_scan(benchmark::State& state) {
  const auto v = HilbertFunctionView::of(parse_ideal(
      "n=10; x1^2, x2^2, x3^2, x4^2, x5^2, x6^2, x7^2, x8^2, x9^2, x10^2"));
  DepthOptions opts;
  opts.parallel = state.range(0) != 0;
  opts.m = 20;
  for (auto _ : state) benchmark::DoNotOptimize(hdepth_series(v, opts));
  state.SetLabel(opts.parallel ? "parallel" : "serial");
}
BENCHMARK(series_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

// The lex ideal reaches degree 34333, so the squarefree path runs in a ring
// of that many variables.
void algorithm1_high_degree(benchmark::State& state) {
  const auto I = parse_ideal("n=6; x1^2*x4, x2*x6^2");
  DepthOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(hdepth_algorithm1(I, opts));
  state.SetLabel(opts.parallel ? "parallel" : "serial");
}
BENCHMARK(algorithm1_high_degree)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
