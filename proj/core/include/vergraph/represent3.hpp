#pragma once

// Exact vertex-random representation of three-vertex VERGs and the circle
// kernels g(x1 + x2 mod 1).

#include "vergraph/kernel.hpp"
#include "vergraph/models.hpp"
#include "vergraph/spectral.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace vergraph {

/// True iff (z1, z2, z3) -> (z1 + z2, z1 + z3, z2 + z3) mod k is a bijection
/// of {0..k-1}^3, checked exhaustively; 2 <= k <= 512.
bool mod_k_map_is_bijective(int k);

/// VRG on X x [0, 1) with law mu x uniform and adjacency
/// psi((x1, u1), (x2, u2)) = 1(u1 + u2 mod 1 <= phi(x1, x2)).
struct N3Representation {
    FiniteKernel kernel;

    bool adjacent(std::size_t x1, double u1, std::size_t x2, double u2) const;
};

N3Representation build_n3_representation(const FiniteKernel& kernel);

inline constexpr std::uint64_t kDefaultN3Budget = 1'000'000'000;

struct N3DiscreteResult {
    Distribution distribution;
    /// Kernel with phi snapped to multiples of 1 / grid.
    FiniteKernel snapped;
    /// max |phi - snapped phi|.
    double snap_distance = 0.0;
    int grid = 0;
    /// counts[t][g]: number of (z1, z2, z3) in [grid]^3 producing graph g for
    /// type vector t (t = t1 b^2 + t2 b + t3).
    std::vector<std::vector<std::uint64_t>> counts;
};

/// Three-vertex construction with u_i replaced by z_i / grid, z_i uniform on
/// {0..grid-1}: edge ij iff (z_i + z_j) mod grid < grid * phi(t_i, t_j), so
/// each edge fires on exactly grid * phi residues. grid must be odd.
N3DiscreteResult n3_exact_distribution_discrete(const FiniteKernel& kernel, int grid);

struct ThresholdCircle {
    double p = 0.0; // g(x) = 1(x <= p)
};
struct SampledCircle {
    std::vector<double> values; // g at midpoints (r + 0.5) / m
};
using CircleKernel = std::variant<ThresholdCircle, SampledCircle>;

struct CircleSpectrum {
    SpectrumSummary summary;
    /// |g^(k)| for k = 0..m/2.
    std::vector<double> fourier_magnitudes;
    /// sum of lambda^3 over the returned multiset.
    double cube_sum = 0.0;
};

/// Eigenvalues {g^(0)} U {+|g^(k)|, -|g^(k)| : 1 <= k <= m/2} from the DFT of
/// m cell values of g. Sampled kernels use their m midpoint values (m must
/// equal values.size()); threshold kernels use exact cell averages, which keep
/// g^(0) = p. m must be a power of two >= 64.
CircleSpectrum circle_kernel_spectrum(const CircleKernel& kernel, std::size_t m);

/// lambda_0 = p, lambda_j = |sin(pi j p)| / (pi j) for j = 1..count.
std::vector<double> threshold_circle_eigenvalues(double p, int count);

} // namespace vergraph
