#include "vergraph/represent3.hpp"

#include "vergraph/budget.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace vergraph {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};
struct PlanDestroy {
    void operator()(fftw_plan p) const
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(p);
    }
};

// Forward DFT of real input: X_k = sum_r x_r e^{-2 pi i k r / m}, k = 0..m/2.
std::vector<std::complex<double>> real_dft(const std::vector<double>& x)
{
    const int m = static_cast<int>(x.size());
    std::unique_ptr<double, FftwFree> in(fftw_alloc_real(m));
    std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(m / 2 + 1));
    std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDestroy> plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan.reset(fftw_plan_dft_r2c_1d(m, in.get(), out.get(), FFTW_ESTIMATE));
    }
    std::copy(x.begin(), x.end(), in.get());
    fftw_execute(plan.get());
    std::vector<std::complex<double>> result(m / 2 + 1);
    for (int k = 0; k <= m / 2; ++k) {
        result[k] = {out.get()[k][0], out.get()[k][1]};
    }
    return result;
}

std::vector<double> circle_cells(const CircleKernel& kernel, std::size_t m)
{
    if (const auto* t = std::get_if<ThresholdCircle>(&kernel)) {
        if (!(t->p >= 0.0 && t->p <= 1.0)) {
            throw ValidationError("threshold circle kernel: p outside [0, 1]");
        }
        // Average of 1(x <= p) over the cell [r/m, (r+1)/m).
        std::vector<double> cells(m);
        const double scaled = t->p * static_cast<double>(m);
        for (std::size_t r = 0; r < m; ++r) {
            cells[r] = std::clamp(scaled - static_cast<double>(r), 0.0, 1.0);
        }
        return cells;
    }
    const auto& sampled = std::get<SampledCircle>(kernel);
    if (sampled.values.size() != m) {
        throw ValidationError("sampled circle kernel: " + std::to_string(sampled.values.size()) +
                              " values but m=" + std::to_string(m));
    }
    for (std::size_t r = 0; r < m; ++r) {
        const double v = sampled.values[r];
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ValidationError("sampled circle kernel: values[" + std::to_string(r) +
                                  "] outside [0, 1]");
        }
    }
    return sampled.values;
}

} // namespace

bool mod_k_map_is_bijective(int k)
{
    if (k < 2 || k > 512) {
        throw BudgetExceeded("mod_k_map_is_bijective: k=" + std::to_string(k) + " outside [2, 512]");
    }
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<bool> hit(kk * kk * kk, false);
    for (std::size_t z1 = 0; z1 < kk; ++z1) {
        for (std::size_t z2 = 0; z2 < kk; ++z2) {
            const std::size_t s12 = (z1 + z2) % kk;
            for (std::size_t z3 = 0; z3 < kk; ++z3) {
                const std::size_t s13 = (z1 + z3) % kk;
                const std::size_t s23 = (z2 + z3) % kk;
                const std::size_t cell = (s12 * kk + s13) * kk + s23;
                if (hit[cell]) {
                    return false;
                }
                hit[cell] = true;
            }
        }
    }
    // k^3 distinct images in a set of size k^3.
    return true;
}

bool N3Representation::adjacent(std::size_t x1, double u1, std::size_t x2, double u2) const
{
    const double sum = std::fmod(u1 + u2, 1.0);
    return sum <= kernel.phi(x1, x2);
}

N3Representation build_n3_representation(const FiniteKernel& kernel) { return {kernel}; }

N3DiscreteResult n3_exact_distribution_discrete(const FiniteKernel& kernel, int grid)
{
    if (grid < 1 || grid % 2 == 0) {
        throw ValidationError("grid must be a positive odd integer, got " + std::to_string(grid));
    }
    const std::size_t b = kernel.types();
    const auto g = static_cast<std::uint64_t>(grid);
    require_budget(saturating_mul(saturating_pow(g, 3), saturating_pow(b, 3)), kDefaultN3Budget,
                   "n3_exact_distribution_discrete grid^3 * b^3");

    // Snap phi to the grid; threshold[i][j] = grid * snapped phi.
    std::vector<std::vector<double>> snapped_phi(b, std::vector<double>(b));
    std::vector<std::uint64_t> threshold(b * b);
    double snap = 0.0;
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            const auto c = static_cast<std::uint64_t>(std::llround(kernel.phi(i, j) * grid));
            threshold[i * b + j] = c;
            snapped_phi[i][j] = static_cast<double>(c) / grid;
            snap = std::max(snap, std::abs(snapped_phi[i][j] - kernel.phi(i, j)));
        }
    }
    std::vector<double> mu(kernel.mu().begin(), kernel.mu().end());

    N3DiscreteResult out{Distribution{3, std::vector<double>(8, 0.0)},
                         FiniteKernel(mu, snapped_phi), snap, grid, {}};
    out.counts.assign(b * b * b, std::vector<std::uint64_t>(8, 0));
    const double cells = static_cast<double>(g * g * g);

    for (std::size_t t1 = 0; t1 < b; ++t1) {
        for (std::size_t t2 = 0; t2 < b; ++t2) {
            for (std::size_t t3 = 0; t3 < b; ++t3) {
                const std::uint64_t c12 = threshold[t1 * b + t2];
                const std::uint64_t c13 = threshold[t1 * b + t3];
                const std::uint64_t c23 = threshold[t2 * b + t3];
                auto& counts = out.counts[(t1 * b + t2) * b + t3];
                for (std::uint64_t z1 = 0; z1 < g; ++z1) {
                    for (std::uint64_t z2 = 0; z2 < g; ++z2) {
                        const unsigned e12 = (z1 + z2) % g < c12 ? 1U : 0U;
                        for (std::uint64_t z3 = 0; z3 < g; ++z3) {
                            const unsigned e13 = (z1 + z3) % g < c13 ? 2U : 0U;
                            const unsigned e23 = (z2 + z3) % g < c23 ? 4U : 0U;
                            ++counts[e12 | e13 | e23];
                        }
                    }
                }
                const double weight = kernel.mu(t1) * kernel.mu(t2) * kernel.mu(t3);
                for (int graph = 0; graph < 8; ++graph) {
                    out.distribution.probs[graph] += weight * static_cast<double>(counts[graph]) / cells;
                }
            }
        }
    }
    return out;
}

CircleSpectrum circle_kernel_spectrum(const CircleKernel& kernel, std::size_t m)
{
    if (m < 64 || !std::has_single_bit(m)) {
        throw ValidationError("circle_kernel_spectrum: m=" + std::to_string(m) +
                              " must be a power of two >= 64");
    }
    const auto dft = real_dft(circle_cells(kernel, m));
    const double scale = 1.0 / static_cast<double>(m);

    CircleSpectrum out;
    std::vector<double> eigenvalues;
    eigenvalues.reserve(m + 1);
    for (std::size_t k = 0; k < dft.size(); ++k) {
        const double magnitude = std::abs(dft[k]) * scale;
        out.fourier_magnitudes.push_back(magnitude);
        if (k == 0) {
            eigenvalues.push_back(dft[0].real() * scale);
        } else {
            eigenvalues.push_back(magnitude);
            eigenvalues.push_back(-magnitude);
        }
    }
    // The +-|g^(k)| pairs cancel, leaving g^(0)^3 exactly.
    out.cube_sum = std::pow(eigenvalues.front(), 3);
    double pairs = 0.0;
    for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
        pairs += std::pow(eigenvalues[i], 3);
    }
    out.cube_sum += pairs;
    out.summary = summarize_spectrum(std::move(eigenvalues), 4);
    return out;
}

std::vector<double> threshold_circle_eigenvalues(double p, int count)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("threshold_circle_eigenvalues: p outside [0, 1]");
    }
    std::vector<double> out{p};
    for (int j = 1; j <= count; ++j) {
        out.push_back(std::abs(std::sin(std::numbers::pi * j * p)) / (std::numbers::pi * j));
    }
    return out;
}

} // namespace vergraph
