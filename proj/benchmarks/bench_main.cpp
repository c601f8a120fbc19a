#include <random>

#include <benchmark/benchmark.h>

#include "congr/verify.hpp"

using namespace congr;

namespace {

MatR random_matrix(std::size_t n, const RingPtr& spec, Modulus m, std::mt19937_64& rng) {
  MatR x(n, spec, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Coeff> c(spec->rank());
      for (auto& v : c) v = static_cast<Coeff>(rng() % 1000);
      x.set(i, j, RingElem(spec, c, m));
    }
  return x;
}

void BM_Determinant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto x = random_matrix(n, RingSpec::gaussian(), Modulus::of(3125), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mat_det(x));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 6);

void BM_Commutator(benchmark::State& state) {
  std::mt19937_64 rng(2);
  QuotientContext c{static_cast<std::size_t>(state.range(0)), 3, 1, 3, RingSpec::gaussian()};
  auto x = random_quotient_elem(c, rng), y = random_quotient_elem(c, rng);
  for (auto _ : state) benchmark::DoNotOptimize(q_commutator(x, y));
}
BENCHMARK(BM_Commutator)->DenseRange(2, 6);

void BM_Enumerate(benchmark::State& state) {
  QuotientContext c{2, 3, 1, static_cast<int>(state.range(0)), RingSpec::integers()};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quotient(c));
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_BracketTableSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_bracket_table(3, 5, 1, 1, RingSpec::gaussian()));
}
BENCHMARK(BM_BracketTableSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
