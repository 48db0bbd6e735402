#pragma once

// Named verifications shared by the CLI `check` verb and the test suites.
// Each returns the measured quantities and a PASS/FAIL verdict.

#include "vergraph/kernel.hpp"
#include "vergraph/models.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vergraph {

struct CheckReport {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, double>> values;

    /// "key=value key=value ... PASS" (or FAIL).
    std::string line() const;
};

/// TV(VERG, slot-VRG approximation) <= n^2 / M, by exact integration.
CheckReport check_approximation_bound(const FiniteKernel& kernel, int n, std::uint64_t slots);

/// Spectral vs type-sequence rooted-cycle expectation; relative gap <= 1e-9.
CheckReport check_rooted_cycles(const FiniteKernel& kernel, int n, int cyc);

/// Discrete three-vertex construction vs the VERG law of the snapped kernel
/// (max absolute difference <= 1e-12).
CheckReport check_three_vertex_representation(const FiniteKernel& kernel, int grid);

/// ERG rigidity for 4 <= n <= 6: constant kernels reproduce G(n, p) with a
/// collapsed chain; others satisfy rho^4 <= lambda_1^4 <= sum lambda^4 with
/// sum lambda^4 > rho^4 and stay > 1e-6 in TV from every grid ERG.
CheckReport check_erg_rigidity(const FiniteKernel& kernel, int n, double grid_step = 0.001);

/// mod-k map bijective for odd k, not for even k, 2 <= k <= k_max.
CheckReport check_mod_k_bijection(int k_max);

/// Threshold circle spectrum vs closed form (j <= 5, 2e-3) and cube sum vs p^3 (1e-6).
CheckReport check_circle_spectrum(double p, std::size_t m);

/// Positive dependence gap >= -1e-12.
CheckReport check_positive_dependence(const FiniteKernel& kernel);

/// Rank and squared eigenvalues recovered from type-sequence cycle
/// expectations at k = 4, 8, ..., 4 (r_max + 1) vs the operator spectrum (1e-6).
CheckReport check_rank_recovery(const FiniteKernel& kernel, int r_max);

/// Half-sum TV vs exhaustive max event discrepancy (n <= 3, 1e-12).
CheckReport check_event_discrepancy(const Distribution& p1, const Distribution& p2);

} // namespace vergraph
