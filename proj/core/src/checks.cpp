#include "vergraph/checks.hpp"

#include "vergraph/approximate.hpp"
#include "vergraph/budget.hpp"
#include "vergraph/io.hpp"
#include "vergraph/metrics.hpp"
#include "vergraph/represent3.hpp"
#include "vergraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vergraph {

std::string CheckReport::line() const
{
    std::string out;
    for (const auto& [key, value] : values) {
        out += key + "=" + format_number(value) + " ";
    }
    out += pass ? "PASS" : "FAIL";
    return out;
}

CheckReport check_approximation_bound(const FiniteKernel& kernel, int n, std::uint64_t slots)
{
    const auto spec = build_vrg_approx(kernel, n, slots);
    const double tv = tv_distance(verg_exact_distribution(n, kernel), approx_exact_distribution(spec));
    const double bound = static_cast<double>(n) * n / static_cast<double>(slots);
    return {"thm33", tv <= bound, {{"tv", tv}, {"bound", bound}}};
}

CheckReport check_rooted_cycles(const FiniteKernel& kernel, int n, int cyc)
{
    const auto r = cycle_count_report(kernel, n, cyc);
    return {"lemma43",
            r.relative_gap <= 1e-9,
            {{"spectral", r.spectral_value}, {"bruteforce", r.bruteforce_value}, {"relative_gap", r.relative_gap}}};
}

CheckReport check_three_vertex_representation(const FiniteKernel& kernel, int grid)
{
    const auto discrete = n3_exact_distribution_discrete(kernel, grid);
    const auto exact = verg_exact_distribution(3, discrete.snapped);
    double diff = 0.0;
    for (std::size_t g = 0; g < exact.size(); ++g) {
        diff = std::max(diff, std::abs(exact.probs[g] - discrete.distribution.probs[g]));
    }
    return {"thm44", diff <= 1e-12, {{"snap_distance", discrete.snap_distance}, {"max_abs_diff", diff}}};
}

CheckReport check_erg_rigidity(const FiniteKernel& kernel, int n, double grid_step)
{
    if (n < 4 || n > kDefaultExactVertices) {
        throw ValidationError("thm42 check needs 4 <= n <= 6");
    }
    const auto v = erg_representation_test(kernel, n);
    const auto law = verg_exact_distribution(n, kernel);
    CheckReport r{"thm42", false, {{"rho4", v.rho4}, {"lambda1_4", v.lambda1_4}, {"sum_lambda4", v.sum_lambda4}}};
    if (v.is_erg) {
        const double p = kernel.reduced().phi(0, 0);
        const double tv = tv_distance(law, erg_distribution(n, p));
        r.values.emplace_back("tv_to_erg", tv);
        r.pass = std::abs(v.sum_lambda4 - v.rho4) <= 1e-12 && std::abs(v.lambda1_4 - v.rho4) <= 1e-12 &&
                 tv <= 1e-12;
    } else {
        const auto nearest = nearest_erg(law, grid_step);
        r.values.emplace_back("nearest_p", nearest.p);
        r.values.emplace_back("nearest_tv", nearest.distance);
        r.pass = v.rho4 <= v.lambda1_4 + 1e-12 && v.lambda1_4 <= v.sum_lambda4 + 1e-12 &&
                 v.sum_lambda4 > v.rho4 && nearest.distance > 1e-6;
    }
    r.values.emplace_back("is_erg", v.is_erg ? 1.0 : 0.0);
    return r;
}

CheckReport check_mod_k_bijection(int k_max)
{
    if (k_max < 2 || k_max > 512) {
        throw BudgetExceeded("check lemma45: k_max=" + std::to_string(k_max) + " outside [2, 512]");
    }
    int failures = 0;
    int checked = 0;
    for (int k = 2; k <= k_max; ++k) {
        const bool bijective = mod_k_map_is_bijective(k);
        if (bijective != (k % 2 == 1)) {
            ++failures;
        }
        ++checked;
    }
    return {"lemma45", failures == 0, {{"k_checked", checked}, {"failures", failures}}};
}

CheckReport check_circle_spectrum(double p, std::size_t m)
{
    const auto spectrum = circle_kernel_spectrum(ThresholdCircle{p}, m);
    const auto closed = threshold_circle_eigenvalues(p, 5);
    double max_err = std::abs(spectrum.fourier_magnitudes[0] - closed[0]);
    for (int j = 1; j <= 5; ++j) {
        max_err = std::max(max_err, std::abs(spectrum.fourier_magnitudes[j] - closed[j]));
    }
    const double cube_err = std::abs(spectrum.cube_sum - p * p * p);
    return {"rmk47",
            max_err <= 2e-3 && cube_err <= 1e-6,
            {{"max_eigen_error", max_err}, {"cube_sum", spectrum.cube_sum}, {"cube_error", cube_err}}};
}

CheckReport check_positive_dependence(const FiniteKernel& kernel)
{
    const double gap = positive_dependence_gap(kernel);
    return {"posdep", gap >= -1e-12, {{"gap", gap}}};
}

CheckReport check_rank_recovery(const FiniteKernel& kernel, int r_max)
{
    const int n = 4 * (r_max + 1);
    std::map<int, double> cycles;
    for (int m = 1; m <= r_max + 1; ++m) {
        cycles[4 * m] = expected_rooted_cycles_bruteforce(kernel, n, 4 * m);
    }
    const auto recovered = rank_and_multiset_from_cycles(cycles, n, r_max);
    const auto spectrum = operator_eigenvalues(kernel);
    double err = recovered.rank == spectrum.rank ? 0.0 : 1.0;
    if (recovered.rank == spectrum.rank) {
        for (int i = 0; i < recovered.rank; ++i) {
            err = std::max(err, std::abs(recovered.squares[i] - spectrum.squared_multiset[i]));
        }
    }
    return {"rank",
            err <= 1e-6 && !recovered.rank_exceeds_max,
            {{"rank", recovered.rank}, {"operator_rank", spectrum.rank}, {"max_error", err}}};
}

CheckReport check_event_discrepancy(const Distribution& p1, const Distribution& p2)
{
    const double tv = tv_distance(p1, p2);
    const double best = max_event_discrepancy(p1, p2);
    return {"prop32", std::abs(tv - best) <= 1e-12, {{"tv", tv}, {"max_event", best}}};
}

} // namespace vergraph
