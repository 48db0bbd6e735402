#include "vergraph/spectral.hpp"

#include "vergraph/budget.hpp"
#include "vergraph/jacobi.hpp"
#include "vergraph/symmetric_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace vergraph {

namespace {

void check_cycle_length(int n, int cyc)
{
    if (cyc < 3 || cyc > n) {
        throw ValidationError("cycle length " + std::to_string(cyc) + " outside [3, n=" +
                              std::to_string(n) + "]");
    }
}

// sum over t in [b]^len of prod mu(t_i) * phi(t_1,t_2) ... phi(t_len,t_1).
double closed_walk_sum(const FiniteKernel& k, int len)
{
    const std::size_t b = k.types();
    require_budget(saturating_pow(b, static_cast<unsigned>(len)), kDefaultCycleBudget,
                   "rooted-cycle type sequences");
    std::vector<std::size_t> t(len, 0);
    double sum = 0.0;
    while (true) {
        double term = 1.0;
        for (int i = 0; i < len; ++i) {
            term *= k.mu(t[i]) * k.phi(t[i], t[(i + 1) % len]);
        }
        sum += term;

        int pos = len - 1;
        while (pos >= 0 && ++t[pos] == b) {
            t[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return sum;
}

// sum_x mu(x) d(x)^2 and rho, where d(x) = sum_y mu(y) phi(x, y).
std::pair<double, double> degree_moments(const FiniteKernel& k)
{
    double second = 0.0;
    double rho = 0.0;
    for (std::size_t x = 0; x < k.types(); ++x) {
        double d = 0.0;
        for (std::size_t y = 0; y < k.types(); ++y) {
            d += k.mu(y) * k.phi(x, y);
        }
        rho += k.mu(x) * d;
        second += k.mu(x) * d * d;
    }
    return {second, rho};
}

} // namespace

SpectrumSummary summarize_spectrum(std::vector<double> eigenvalues, int max_power)
{
    SpectrumSummary s;
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    s.eigenvalues = std::move(eigenvalues);
    s.power_sums = power_sums(s.eigenvalues, static_cast<std::size_t>(std::max(max_power, 2)));
    s.power_sums.resize(static_cast<std::size_t>(std::max(max_power, 0)));
    for (double l : s.eigenvalues) {
        s.hs_norm_sq += l * l;
        if (std::abs(l) > kRankTolerance) {
            ++s.rank;
            s.squared_multiset.push_back(l * l);
        }
    }
    std::sort(s.squared_multiset.begin(), s.squared_multiset.end(), std::greater<>());
    return s;
}

SpectrumSummary operator_eigenvalues(const FiniteKernel& kernel, int max_power)
{
    const FiniteKernel k = kernel.reduced();
    SymmetricMatrix s(k.types());
    for (std::size_t i = 0; i < k.types(); ++i) {
        for (std::size_t j = i; j < k.types(); ++j) {
            s.set(i, j, std::sqrt(k.mu(i)) * k.phi(i, j) * std::sqrt(k.mu(j)));
        }
    }
    return summarize_spectrum(jacobi_eigenvalues(std::move(s)), max_power);
}

double falling_factorial(int n, int k)
{
    double out = 1.0;
    for (int i = 0; i < k; ++i) {
        out *= static_cast<double>(n - i);
    }
    return out;
}

double expected_rooted_cycles_spectral(const FiniteKernel& kernel, int n, int cyc)
{
    check_cycle_length(n, cyc);
    const auto spectrum = operator_eigenvalues(kernel, 0);
    double sum = 0.0;
    for (double l : spectrum.eigenvalues) {
        sum += std::pow(l, cyc);
    }
    return falling_factorial(n, cyc) * sum;
}

double expected_rooted_cycles_bruteforce(const FiniteKernel& kernel, int n, int cyc)
{
    check_cycle_length(n, cyc);
    return falling_factorial(n, cyc) * closed_walk_sum(kernel, cyc);
}

CycleCountReport cycle_count_report(const FiniteKernel& kernel, int n, int cyc)
{
    CycleCountReport r{n, cyc, expected_rooted_cycles_spectral(kernel, n, cyc),
                       expected_rooted_cycles_bruteforce(kernel, n, cyc), 0.0};
    r.relative_gap = std::abs(r.spectral_value - r.bruteforce_value) /
                     std::max(r.bruteforce_value, 1e-15);
    return r;
}

double mean_edge_probability(const FiniteKernel& kernel) { return degree_moments(kernel).second; }

BinaryTest is_binary_kernel(const FiniteKernel& kernel)
{
    double defect = 0.0;
    for (std::size_t i = 0; i < kernel.types(); ++i) {
        for (std::size_t j = 0; j < kernel.types(); ++j) {
            const double v = kernel.phi(i, j);
            defect += kernel.mu(i) * kernel.mu(j) * v * (1.0 - v);
        }
    }
    return {defect <= 1e-12, defect};
}

double hs_norm_sq(const FiniteKernel& kernel)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < kernel.types(); ++i) {
        for (std::size_t j = 0; j < kernel.types(); ++j) {
            const double v = kernel.phi(i, j);
            sum += kernel.mu(i) * kernel.mu(j) * v * v;
        }
    }
    return sum;
}

ErgVerdict erg_representation_test(const FiniteKernel& kernel, int n)
{
    if (n < 1) {
        throw ValidationError("erg_representation_test: n must be >= 1");
    }
    const FiniteKernel k = kernel.reduced();
    ErgVerdict v;
    const double first = k.phi(0, 0);
    v.is_erg = true;
    for (std::size_t i = 0; i < k.types() && v.is_erg; ++i) {
        for (std::size_t j = 0; j < k.types(); ++j) {
            if (std::abs(k.phi(i, j) - first) > 1e-12) {
                v.is_erg = false;
                break;
            }
        }
    }
    const auto spectrum = operator_eigenvalues(k, 4);
    v.rho = mean_edge_probability(k);
    v.lambda1 = spectrum.eigenvalues.front();
    v.rho4 = std::pow(v.rho, 4);
    v.lambda1_4 = std::pow(v.lambda1, 4);
    v.sum_lambda4 = spectrum.power_sums[3];
    v.cycle_ratio4 = closed_walk_sum(k, 4);
    v.gap = v.sum_lambda4 - v.rho4;
    return v;
}

double positive_dependence_gap(const FiniteKernel& kernel)
{
    const auto [second, rho] = degree_moments(kernel);
    return second - rho * rho;
}

CycleRecovery rank_and_multiset_from_cycles(const std::map<int, double>& cycle_expectations, int n,
                                            int r_max)
{
    if (r_max < 1) {
        throw ValidationError("r_max must be >= 1");
    }
    const int needed = r_max + 1;
    if (n < 4 * needed) {
        throw ValidationError("rank recovery with r_max=" + std::to_string(r_max) + " needs n >= " +
                              std::to_string(4 * needed));
    }
    std::vector<double> p;
    for (int m = 1; m <= needed; ++m) {
        const auto it = cycle_expectations.find(4 * m);
        if (it == cycle_expectations.end()) {
            throw ValidationError("missing E N_" + std::to_string(4 * m) + " for r_max=" +
                                  std::to_string(r_max));
        }
        p.push_back(it->second / falling_factorial(n, 4 * m));
    }
    const auto e = power_sums_to_elementary(p);

    CycleRecovery out;
    for (int K = r_max; K >= 1; --K) {
        if (e[K - 1] > kRankTolerance) {
            out.rank = K;
            break;
        }
    }
    out.rank_exceeds_max = e[r_max] > kRankTolerance;
    if (out.rank > 0) {
        out.fourth_powers = recover_eigen_multiset(p, out.rank);
        for (double b : out.fourth_powers) {
            out.squares.push_back(std::sqrt(std::max(b, 0.0)));
        }
    }
    return out;
}

} // namespace vergraph
