#include <benchmark/benchmark.h>

#include "wishart/entropy.hpp"
#include "wishart/fixtures.hpp"
#include "wishart/inference.hpp"
#include "wishart/model.hpp"
#include "wishart/simulate.hpp"
#include "wishart/special_functions.hpp"

using namespace wishart;

static void BM_Digamma(benchmark::State& state) {
  double x = 0.137;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_Digamma);

static void BM_Chi2Survival(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi2_survival(s, 1));
    s = s < 40.0 ? s + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_Chi2Survival);

static void BM_ShannonEntropy(benchmark::State& state) {
  const WishartParams p(esar_urban_covariance(), 3.2);
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(p).value);
}
BENCHMARK(BM_ShannonEntropy);

static void BM_EntropyVariance(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(entropy_variance(EntropyKind::renyi(0.1), 3, 3.2));
}
BENCHMARK(BM_EntropyVariance);

static void BM_SampleWishart(benchmark::State& state) {
  const WishartParams p(esar_urban_covariance(), 3.2);
  RngStream rng(1, 0);
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_wishart(p, n, rng));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleWishart)->Arg(9)->Arg(121)->Arg(400);

static void BM_Estimate(benchmark::State& state) {
  const WishartParams p(esar_urban_covariance(), 3.2);
  RngStream rng(1, 0);
  const SampleSet sample = sample_wishart(p, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(estimate(sample).params.looks);
}
BENCHMARK(BM_Estimate)->Arg(121)->Arg(1000);

static void BM_LogDensity(benchmark::State& state) {
  const WishartParams p(esar_urban_covariance(), 3.2);
  RngStream rng(1, 0);
  const SampleSet sample = sample_wishart(p, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(log_density(sample[0], p));
}
BENCHMARK(BM_LogDensity);

BENCHMARK_MAIN();
