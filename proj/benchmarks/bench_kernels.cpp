#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "comgraph/commuting_graph.hpp"
#include "comgraph/matrix_space.hpp"
#include "comgraph/witnesses.hpp"

using namespace comgraph;

static void BM_BoolMulPacked(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const std::uint64_t mask = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
  std::uint64_t a = rng() & mask, b = rng() & mask;
  for (auto _ : state) {
    a = bool_mul_packed(a, b, n) ^ (b & mask);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_BoolMulPacked)->Arg(3)->Arg(4)->Arg(8);

static void BM_SpaceCommutes(benchmark::State& state) {
  MatrixSpace space(boolean_semiring(), 4);
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.commutes(rng() % space.size(), rng() % space.size()));
  }
}
BENCHMARK(BM_SpaceCommutes);

static void BM_DiameterM3B(benchmark::State& state) {
  const auto space = std::make_shared<const MatrixSpace>(boolean_semiring(), 3);
  for (auto _ : state) {
    const auto g = CommutingGraph::build(space);
    benchmark::DoNotOptimize(diameter(g));
  }
}
BENCHMARK(BM_DiameterM3B)->Unit(benchmark::kMillisecond);

static void BM_CertifyN4(benchmark::State& state) {
  MatrixSpace space(boolean_semiring(), 4);
  const auto [a, b] = boolean_witness_pair(4);
  for (auto _ : state) benchmark::DoNotOptimize(certify_distance_ge4(space, a, b, 1));
}
BENCHMARK(BM_CertifyN4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
