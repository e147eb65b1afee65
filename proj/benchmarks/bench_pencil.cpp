#include <benchmark/benchmark.h>

#include <random>

#include "pencil/pencil.hpp"
#include "support/generators.hpp"

using namespace pencil;

namespace {

Pencil make_pencil(Index n) {
    std::mt19937_64 rng(12345);
    return testsupport::random_dissipative(n, rng);
}

void BM_Resolvent(benchmark::State& state) {
    const Pencil p = make_pencil(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolvent(p, 2.0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Resolvent)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Decompose(benchmark::State& state) {
    const Pencil p = make_pencil(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_OperatorNorm(benchmark::State& state) {
    std::mt19937_64 rng(999);
    const Matrix M = testsupport::random_gaussian(state.range(0), state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_norm(M));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OperatorNorm)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Simulate(benchmark::State& state) {
    const Pencil p = dzektser_pencil(static_cast<int>(state.range(0)));
    const Decomposition d = decompose(p);
    const Vector x1 = Vector::Ones(d.rank());
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(d, p, x1, 1.0, 100));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_BlockResolventVsDense(benchmark::State& state) {
    std::mt19937_64 rng(777);
    const Index half = state.range(0) / 2;
    const CoupledBlocks blocks = testsupport::random_coupled(half, half, rng);
    const double mu = blocks.omega0 + 1.0;
    if (state.range(1) == 0) {
        for (auto _ : state) {
            benchmark::DoNotOptimize(block_resolvent(blocks, mu));
        }
    } else {
        const Pencil p = assemble(blocks);
        for (auto _ : state) {
            benchmark::DoNotOptimize(resolvent(p, mu));
        }
    }
}
BENCHMARK(BM_BlockResolventVsDense)
    ->ArgsProduct({{16, 32, 64}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
