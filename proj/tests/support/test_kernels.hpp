#pragma once

// Fixtures and generators shared by the test binaries.

#include "vergraph/kernel.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace vergraph::testing {

/// Two equally likely types with phi = [[0.2, 0.8], [0.8, 0.4]].
inline FiniteKernel kstar() { return FiniteKernel({0.5, 0.5}, {{0.2, 0.8}, {0.8, 0.4}}); }

/// phi(i, j) = g_i g_j with g = (0.3, 0.9), uniform mu.
inline FiniteKernel rank_one_kernel() { return FiniteKernel({0.5, 0.5}, {{0.09, 0.27}, {0.27, 0.81}}); }

/// Normalized weights in [0.05, 1) of length b.
inline std::vector<double> random_mu(std::mt19937_64& rng, std::size_t b)
{
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
    return mu;
}

/// b x b symmetric kernel with entries uniform in [lo, hi].
inline FiniteKernel random_kernel(std::mt19937_64& rng, std::size_t b, double lo = 0.0, double hi = 1.0)
{
    std::uniform_real_distribution<double> entry(lo, hi);
    std::vector<std::vector<double>> phi(b, std::vector<double>(b));
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = i; j < b; ++j) {
            phi[i][j] = phi[j][i] = entry(rng);
        }
    }
    return FiniteKernel(random_mu(rng, b), phi);
}

/// Kernel with 1 <= b <= max_b types.
inline FiniteKernel random_kernel_upto(std::mt19937_64& rng, std::size_t max_b)
{
    std::uniform_int_distribution<std::size_t> types(1, max_b);
    return random_kernel(rng, types(rng));
}

} // namespace vergraph::testing
