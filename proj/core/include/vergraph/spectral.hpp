#pragma once

// Spectra of the integral operator (T g)(x) = sum_y phi(x, y) g(y) mu(y) of a
// finite kernel, and the subgraph-count identities built on them.

#include "vergraph/kernel.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace vergraph {

/// |lambda| and e_K thresholds used for rank decisions.
inline constexpr double kRankTolerance = 1e-10;

struct SpectrumSummary {
    /// Descending; one per positive-mass type.
    std::vector<double> eigenvalues;
    /// power_sums[k - 1] = sum_i lambda_i^k.
    std::vector<double> power_sums;
    /// sum_i lambda_i^2 (equals E phi^2).
    double hs_norm_sq = 0.0;
    int rank = 0;
    /// {lambda_i^2 : |lambda_i| > kRankTolerance}, descending.
    std::vector<double> squared_multiset;
};

/// Builds a summary from an eigenvalue list (any order).
SpectrumSummary summarize_spectrum(std::vector<double> eigenvalues, int max_power = 4);

/// Eigenvalues of T, computed as those of diag(sqrt mu) phi diag(sqrt mu)
/// by cyclic Jacobi after dropping zero-mass types.
SpectrumSummary operator_eigenvalues(const FiniteKernel& kernel, int max_power = 4);

/// n (n-1) ... (n-k+1) as a double.
double falling_factorial(int n, int k);

/// E N_cyc = n^(falling cyc) sum_i lambda_i^cyc, rooted cyc-cycles; 3 <= cyc <= n.
double expected_rooted_cycles_spectral(const FiniteKernel& kernel, int n, int cyc);

inline constexpr std::uint64_t kDefaultCycleBudget = 10'000'000;

/// Same quantity by direct summation over type sequences t in [b]^cyc of
/// prod mu(t_i) phi(t_1,t_2) ... phi(t_cyc,t_1).
double expected_rooted_cycles_bruteforce(const FiniteKernel& kernel, int n, int cyc);

struct CycleCountReport {
    int n = 0;
    int k = 0;
    double spectral_value = 0.0;
    double bruteforce_value = 0.0;
    /// |spectral - bruteforce| / max(bruteforce, 1e-15).
    double relative_gap = 0.0;
};

CycleCountReport cycle_count_report(const FiniteKernel& kernel, int n, int cyc);

/// rho = E phi(X1, X2).
double mean_edge_probability(const FiniteKernel& kernel);

struct BinaryTest {
    bool binary = false;
    /// E[phi (1 - phi)]; zero iff phi is 0/1-valued almost everywhere.
    double defect = 0.0;
};

BinaryTest is_binary_kernel(const FiniteKernel& kernel);

/// E phi(X1, X2)^2.
double hs_norm_sq(const FiniteKernel& kernel);

/// Constancy verdict with its spectral certificate rho^4 <= lambda_1^4 <= sum lambda^4.
struct ErgVerdict {
    bool is_erg = false;
    double rho = 0.0;
    double lambda1 = 0.0;
    double rho4 = 0.0;
    double lambda1_4 = 0.0;
    double sum_lambda4 = 0.0;
    /// E N_4 / n^(falling 4), by type-sequence summation.
    double cycle_ratio4 = 0.0;
    /// sum lambda^4 - rho^4.
    double gap = 0.0;
};

/// is_erg iff all phi entries among positive-mass types agree within 1e-12.
ErgVerdict erg_representation_test(const FiniteKernel& kernel, int n);

/// Pr{1~2 and 1~3} - Pr{1~2}^2 = sum_x mu(x) (sum_y mu(y) phi(x,y))^2 - rho^2.
double positive_dependence_gap(const FiniteKernel& kernel);

struct CycleRecovery {
    int rank = 0;
    /// Recovered {lambda_i^4}, descending.
    std::vector<double> fourth_powers;
    /// {lambda_i^2} = square roots of fourth_powers.
    std::vector<double> squares;
    /// e_{r_max + 1} > kRankTolerance: the true rank exceeds r_max.
    bool rank_exceeds_max = false;
};

/// Recovers rank and squared-eigenvalue multiset from E N_k at k = 4, 8, ...,
/// 4 (r_max + 1): p_m = E N_{4m} / n^(falling 4m) are the power sums of
/// lambda_i^4.
CycleRecovery rank_and_multiset_from_cycles(const std::map<int, double>& cycle_expectations, int n,
                                            int r_max);

} // namespace vergraph
