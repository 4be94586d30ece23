#include <benchmark/benchmark.h>

#include "binlr/css_gf2.hpp"
#include "binlr/gcss_bool.hpp"
#include "binlr/instances.hpp"
#include "binlr/oracle.hpp"
#include "binlr/rational.hpp"

namespace {

using binlr::Rational;

// Args: {n, k}. Square planted instances with 10% noise.
void BM_CssExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto inst = binlr::planted(n, n, k, binlr::Semiring::gf2, Rational(1, 10), 7);
  for (auto _ : state) benchmark::DoNotOptimize(binlr::css_exhaustive(inst.a, k).error);
}
BENCHMARK(BM_CssExhaustive)->ArgsProduct({{16, 32, 64}, {1, 2, 3}})->Unit(benchmark::kMicrosecond);

void BM_GcssExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto inst = binlr::planted(n, n, k, binlr::Semiring::boolean, Rational(1, 10), 11);
  for (auto _ : state) benchmark::DoNotOptimize(binlr::gcss_exhaustive(inst.a, k).error);
}
BENCHMARK(BM_GcssExhaustive)->ArgsProduct({{8, 12, 16}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_OptGf2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto inst = binlr::planted(n, n, k, binlr::Semiring::gf2, Rational(1, 10), 13);
  for (auto _ : state) benchmark::DoNotOptimize(binlr::opt_gf2(inst.a, k).error);
}
BENCHMARK(BM_OptGf2)->ArgsProduct({{4, 6, 8}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_Rank1BestColumn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = binlr::random_bernoulli(n, n, Rational(1, 3), 17);
  for (auto _ : state) benchmark::DoNotOptimize(binlr::rank1_best_column(a).error);
}
BENCHMARK(BM_Rank1BestColumn)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace
