#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "stpconv/conv.hpp"
#include "stpconv/cubic.hpp"
#include "stpconv/grid.hpp"
#include "stpconv/xvector.hpp"

using namespace stpconv;

namespace {

XVector random_vector(std::mt19937& rng, std::size_t dim) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> vals(dim);
  for (auto& v : vals) v = dist(rng);
  return XVector(vals);
}

MaskedGrid random_grid(std::mt19937& rng, std::size_t rows, std::size_t cols,
                       double mask_prob) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::bernoulli_distribution masked(mask_prob);
  MaskedGrid g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!masked(rng)) g.at(r, c) = dist(rng);
  return g;
}

// coprime dimensions make the lcm expansion as large as it gets
void BM_StpInnerMerge(benchmark::State& state) {
  std::mt19937 rng(1);
  const XVector x = random_vector(rng, 997);
  const XVector y = random_vector(rng, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(stp_inner(x, y));
}
BENCHMARK(BM_StpInnerMerge);

void BM_StpInnerExpansion(benchmark::State& state) {
  std::mt19937 rng(1);
  const XVector x = random_vector(rng, 997);
  const XVector y = random_vector(rng, 1000);
  for (auto _ : state) {
    const std::size_t t = std::lcm(x.dim(), y.dim());
    double acc = 0.0;
    for (std::size_t p = 0; p < t; ++p)
      acc += x[p / (t / x.dim())] * y[p / (t / y.dim())];
    benchmark::DoNotOptimize(acc / static_cast<double>(t));
  }
}
BENCHMARK(BM_StpInnerExpansion);

void BM_ClassicalConv2d(benchmark::State& state) {
  std::mt19937 rng(2);
  const MaskedGrid a = random_grid(rng, 64, 64, 0.0);
  const Kernel2D k(random_grid(rng, 3, 3, 0.0));
  const ConvConfig cfg{1, 1, 1, 1, 3, 3, ConvMode::classical};
  for (auto _ : state) benchmark::DoNotOptimize(classical_conv2d(a, k, cfg));
}
BENCHMARK(BM_ClassicalConv2d);

void BM_StpConv2dMasked(benchmark::State& state) {
  std::mt19937 rng(3);
  const MaskedGrid a = random_grid(rng, 64, 64, 0.25);
  const Kernel2D k(random_grid(rng, 3, 3, 0.0));
  const ConvConfig cfg{1, 1, 1, 1, 3, 3, ConvMode::stp};
  for (auto _ : state) benchmark::DoNotOptimize(stp_conv2d(a, k, cfg));
}
BENCHMARK(BM_StpConv2dMasked);

void BM_BuildPsiGather(benchmark::State& state) {
  std::mt19937 rng(4);
  std::vector<MaskedGrid> slices;
  for (int k = 0; k < 8; ++k) slices.push_back(random_grid(rng, 16, 16, 0.2));
  const MaskedCube cube(slices);
  CubicConfig cfg;
  cfg.pad_v = cfg.pad_h = 1;
  cfg.pad_depth = 2;
  cfg.rf_rows = cfg.rf_cols = 3;
  cfg.rf_depth = 3;
  for (auto _ : state) benchmark::DoNotOptimize(build_psi(cube, cfg));
}
BENCHMARK(BM_BuildPsiGather);

void BM_BuildPsiChain(benchmark::State& state) {
  std::mt19937 rng(4);
  std::vector<MaskedGrid> slices;
  for (int k = 0; k < 8; ++k) slices.push_back(random_grid(rng, 16, 16, 0.2));
  const MaskedCube cube(slices);
  CubicConfig cfg;
  cfg.pad_v = cfg.pad_h = 1;
  cfg.pad_depth = 2;
  cfg.rf_rows = cfg.rf_cols = 3;
  cfg.rf_depth = 3;
  for (auto _ : state) benchmark::DoNotOptimize(build_psi_chain(cube, cfg));
}
BENCHMARK(BM_BuildPsiChain);

}  // namespace

BENCHMARK_MAIN();
