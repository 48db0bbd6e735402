#include "vergraph/approximate.hpp"
#include "vergraph/jacobi.hpp"
#include "vergraph/models.hpp"
#include "vergraph/represent3.hpp"
#include "vergraph/sampling.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

vergraph::FiniteKernel kernel(std::size_t b)
{
    std::mt19937_64 rng(b);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::vector<double> mu(b);
    double total = 0.0;
    for (auto& m : mu) {
        m = unit(rng);
        total += m;
    }
    for (auto& m : mu) {
        m /= total;
    }
    std::vector<std::vector<double>> phi(b, std::vector<double>(b));
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = i; j < b; ++j) {
            phi[i][j] = phi[j][i] = unit(rng);
        }
    }
    return vergraph::FiniteKernel(mu, phi);
}

void BM_VergExact(benchmark::State& state)
{
    const auto k = kernel(static_cast<std::size_t>(state.range(1)));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vergraph::verg_exact_distribution(n, k));
    }
}
BENCHMARK(BM_VergExact)->Args({4, 2})->Args({5, 3})->Args({6, 3});

void BM_ApproxExact(benchmark::State& state)
{
    const auto spec = vergraph::build_vrg_approx(kernel(2), static_cast<int>(state.range(0)), 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vergraph::approx_exact_distribution(spec));
    }
}
BENCHMARK(BM_ApproxExact)->Arg(3)->Arg(4)->Arg(5);

void BM_Jacobi(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    vergraph::SymmetricMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            a.set(i, j, unit(rng));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(vergraph::jacobi_eigenvalues(a));
    }
}
BENCHMARK(BM_Jacobi)->Arg(4)->Arg(16)->Arg(64);

void BM_SampleVerg(benchmark::State& state)
{
    const vergraph::ModelSpec spec{static_cast<int>(state.range(0)), vergraph::FiniteVergModel{kernel(3)}};
    std::uint64_t s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vergraph::sample_edges(spec, {++s, 0}));
    }
}
BENCHMARK(BM_SampleVerg)->Arg(4)->Arg(32)->Arg(256);

void BM_ModKBijection(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vergraph::mod_k_map_is_bijective(k));
    }
}
BENCHMARK(BM_ModKBijection)->Arg(51)->Arg(101)->Arg(201);

} // namespace
BENCHMARK_MAIN();
