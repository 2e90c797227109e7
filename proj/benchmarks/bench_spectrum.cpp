#include "jband/examples.hpp"
#include "jband/hermitian.hpp"
#include "jband/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace jband;

namespace {

// Fiber of a random operator, so the matrix has realistic structure.
ComplexMatrix fiber(std::size_t p, std::size_t m) {
    return floquet_symbol(random_operator(1, p, m, 1.0), 0.7);
}

void BM_HermitianEigenvalues(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto h = fiber(4, m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(h));
    }
    state.SetComplexityN(static_cast<long>(h.rows()));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(1, 16)->Complexity();

void BM_SingularValues(benchmark::State& state) {
    const auto a = random_operator(2, 3, static_cast<std::size_t>(state.range(0)), 1.0).corner();
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_values(a));
    }
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(1, 32);

void BM_SampleBands(benchmark::State& state) {
    const auto op = random_operator(3, 4, 2, 1.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_bands(op, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBands)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_VerifyOperator(benchmark::State& state) {
    const auto op = random_operator(4, 3, 3, 2.0);
    VerifyConfig cfg;
    cfg.num_samples = 512;
    cfg.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_operator(op, cfg));
    }
}
BENCHMARK(BM_VerifyOperator)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
