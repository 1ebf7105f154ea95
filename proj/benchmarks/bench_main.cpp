#include <benchmark/benchmark.h>

#include <random>

#include "natbundle/ext1.hpp"
#include "natbundle/hunter.hpp"
#include "natbundle/rat_matrix.hpp"

using namespace natbundle;

namespace {

RatMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform_coefficient(rng, 9);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const RatMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(32)->Arg(64);

void BM_SplittingOfExtension(benchmark::State& state) {
  const long r = state.range(0);
  std::mt19937_64 rng(2);
  const SplittingType f1 = natural_type(static_cast<std::size_t>(r), -4 * r - 1);
  const SplittingType f2 = natural_type(static_cast<std::size_t>(r), 2 * r + 1);
  const BigradedEta eta = sample_eta(f1, f2, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(splitting_of_extension(eta.eta0));
}
BENCHMARK(BM_SplittingOfExtension)->Arg(1)->Arg(2)->Arg(4);

void BM_Hunt(benchmark::State& state) {
  HuntRequest q;
  q.params = HilbertParams{make_rational(1, 3), 0, 2, 3};
  for (auto _ : state) {
    q.seed++;
    benchmark::DoNotOptimize(hunt(q));
  }
}
BENCHMARK(BM_Hunt)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
