#include "wmono/measures.hpp"
#include "wmono/monogamy.hpp"
#include "wmono/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wmono;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = verify::gaussian(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v{verify::gaussian(rng), verify::gaussian(rng)};
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

void BM_kron(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const std::size_t n = state.range(0);
    const auto a = random_hermitian(n, rng);
    const auto b = random_hermitian(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_kron)->Arg(4)->Arg(8)->Arg(16);

void BM_partial_trace_pure(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const std::size_t n = state.range(0);
    const auto psi = verify::sample_pure_state(n, rng);
    const auto dims = psi.dims();
    for (auto _ : state)
        benchmark::DoNotOptimize(partial_trace_pure(psi.amplitudes(), dims, {0}));
}
BENCHMARK(BM_partial_trace_pure)->Arg(4)->Arg(8)->Arg(10);

void BM_hermitian_eig(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto h = random_hermitian(state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_hermitian_eig)->Arg(4)->Arg(16)->Arg(64);

void BM_spin_flip_concurrence(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto rho = verify::sample_two_qubit_density(4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_two_qubit(rho));
}
BENCHMARK(BM_spin_flip_concurrence);

void BM_convex_roof_oracle(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const auto rho = verify::sample_two_qubit_density(2, rng);
    const verify::OracleBudget budget{static_cast<std::size_t>(state.range(0)), 100, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_roof_oracle(rho, verify::RoofObjective::Maximize,
                                                    verify::RoofMeasure::Concurrence, budget, 7));
}
BENCHMARK(BM_convex_roof_oracle)->Arg(1000)->Arg(20000);

void BM_fuzz_trial(benchmark::State& state) {
    verify::FuzzConfig cfg;
    cfg.trials = 10;
    cfg.seed = 11;
    for (auto _ : state) benchmark::DoNotOptimize(verify::run_fuzz(cfg));
}
BENCHMARK(BM_fuzz_trial);

} // namespace

BENCHMARK_MAIN();
