#include <benchmark/benchmark.h>

#include <cmath>

#include "semihilbert/blockop.hpp"
#include "semihilbert/bounds.hpp"
#include "semihilbert/generators.hpp"
#include "semihilbert/linalg.hpp"
#include "semihilbert/rng.hpp"
#include "semihilbert/semiop.hpp"

namespace sh = semihilbert;

namespace {

sh::ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  sh::Rng rng(seed);
  return sh::hermitian_part(rng.complex_normal_matrix(n, n));
}

sh::AContext weight(std::size_t n, std::size_t rank) {
  return sh::new_context(sh::gen_weight(
      {n, rank == n ? sh::WeightKind::RandomFullRank : sh::WeightKind::RandomRankDeficient, rank},
      17));
}

void BM_HermEig(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sh::herm_eig(m));
}
BENCHMARK(BM_HermEig)->DenseRange(2, 10, 2);

void BM_MaxEigenvalueTridiagonal(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sh::max_eigenvalue_tridiagonal(m));
}
BENCHMARK(BM_MaxEigenvalueTridiagonal)->DenseRange(2, 10, 2);

void BM_NumericalRadius(benchmark::State& state) {
  sh::Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = rng.complex_normal_matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(sh::numerical_radius(m));
}
BENCHMARK(BM_NumericalRadius)->DenseRange(2, 10, 2);

void BM_ANumericalRadius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = weight(n, n - 1);
  const auto t = sh::gen_operand(ctx, sh::OperandKind::GeneralAdjointable, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sh::a_numerical_radius(ctx, t));
}
BENCHMARK(BM_ANumericalRadius)->DenseRange(2, 5);

void BM_BlockANumericalRadius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ctx = weight(n, n - 1);
  const auto bctx = sh::make_block_context(ctx);
  std::vector<sh::ComplexMatrix> ops;
  for (std::uint64_t k = 0; k < 4; ++k) {
    ops.push_back(sh::gen_operand(ctx, sh::OperandKind::GeneralAdjointable, 10 + k));
  }
  const auto blk = sh::assemble(ops[0], ops[1], ops[2], ops[3]);
  for (auto _ : state) benchmark::DoNotOptimize(sh::a_numerical_radius(bctx.bbA, blk.assembled));
}
BENCHMARK(BM_BlockANumericalRadius)->DenseRange(2, 5);

void BM_ThetaSweep(benchmark::State& state) {
  const auto m = random_hermitian(6, 5);
  const auto k = random_hermitian(6, 6);
  const auto g = [&](double th) {
    return sh::max_eigenvalue_tridiagonal(std::cos(th) * m + std::sin(th) * k);
  };
  for (auto _ : state) benchmark::DoNotOptimize(sh::theta_sweep_max(g, 1024, 60));
}
BENCHMARK(BM_ThetaSweep);

void BM_EvalBound(benchmark::State& state, const char* id, std::size_t n_ops) {
  const auto ctx = weight(4, 3);
  std::vector<sh::ComplexMatrix> ops;
  for (std::size_t k = 0; k < n_ops; ++k) {
    ops.push_back(sh::gen_operand(ctx, sh::OperandKind::GeneralAdjointable, 20 + k));
  }
  for (auto _ : state) benchmark::DoNotOptimize(sh::eval_bound(id, ctx, ops));
}
BENCHMARK_CAPTURE(BM_EvalBound, I_MAIN, "I-MAIN", 4);
BENCHMARK_CAPTURE(BM_EvalBound, I_THMF, "I-THMF", 4);
BENCHMARK_CAPTURE(BM_EvalBound, E_ZM, "E-ZM", 1);

}  // namespace
BENCHMARK_MAIN();
