#include <benchmark/benchmark.h>

#include <random>

#include "coquat/coquat.hpp"

using namespace coquat;

namespace {

CoqPolynomial random_monic(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Coquaternion> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(u(rng), u(rng), u(rng), u(rng));
  c.emplace_back(1.0);
  return CoqPolynomial(std::move(c));
}

void BM_FindAllZerosQuintic(benchmark::State& state) {
  const CoqPolynomial p{{-9, -12, -18, 9},     {-51, 40.5, -28.5, -52}, {-23.5, -32, -18, 16.5},
                        {24, 6.5, 5.5, -6},   {0.5, 1, 7, 6.5},        1.0};
  for (auto _ : state) benchmark::DoNotOptimize(find_all_zeros(p));
}
BENCHMARK(BM_FindAllZerosQuintic);

void BM_FindAllZerosRandom(benchmark::State& state) {
  const auto p = random_monic(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_all_zeros(p));
}
BENCHMARK(BM_FindAllZerosRandom)->DenseRange(2, 10, 2);

void BM_RealRootsMultiple(benchmark::State& state) {
  RealPolynomial p{1.0};
  for (int i = 0; i < state.range(0); ++i) p = mul_real(p, RealPolynomial{-1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(p));
}
BENCHMARK(BM_RealRootsMultiple)->Arg(2)->Arg(4)->Arg(6);

void BM_Certify(benchmark::State& state) {
  const auto report = find_all_zeros(random_monic(6, 11));
  for (auto _ : state) benchmark::DoNotOptimize(certify(report, 1e-8));
}
BENCHMARK(BM_Certify);

}  // namespace
BENCHMARK_MAIN();
