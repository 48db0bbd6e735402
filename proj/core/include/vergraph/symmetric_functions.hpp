#pragma once

// Power sums, elementary symmetric functions and multiset recovery.
//
// For a multiset {b_1, ..., b_K}, the power sums p_m = sum_i b_i^m determine
// the elementary symmetric functions e_1..e_K through Newton's identities
//   k e_k = sum_{m=1}^{k} (-1)^{m-1} e_{k-m} p_m,   e_0 = 1,
// and the b_i are the roots of z^K - e_1 z^{K-1} + e_2 z^{K-2} - ... + (-1)^K e_K.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vergraph {

/// Root recovery produced complex roots for data claimed to be real.
class IllConditioned : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p_1..p_count of `values`.
std::vector<double> power_sums(std::span<const double> values, std::size_t count);

/// e_1..e_K from p_1..p_K.
std::vector<double> power_sums_to_elementary(std::span<const double> power_sums);

/// Exact-rational Newton identities.
std::vector<mpq_class> power_sums_to_elementary(std::span<const mpq_class> power_sums);

/// Roots (with multiplicity) of the degree-K polynomial built from e_1..e_K,
/// via the eigenvalues of its companion matrix; sorted descending. Throws
/// IllConditioned when a root has |imaginary part| > imag_tol.
std::vector<double> roots_from_elementary(std::span<const double> elementary,
                                          double imag_tol = 1e-6);

/// roots_from_elementary(power_sums_to_elementary(p_1..p_K)). Requires
/// power_sums.size() >= K.
std::vector<double> recover_eigen_multiset(std::span<const double> power_sums, std::size_t K,
                                           double imag_tol = 1e-6);

/// Groups descending values into (mean, multiplicity) clusters whose
/// consecutive members differ by at most `tol`.
std::vector<std::pair<double, int>> cluster_multiset(std::span<const double> sorted_desc,
                                                     double tol = 1e-6);

/// Finite kernel with rational entries, for exact power sums.
struct RationalKernel {
    std::vector<mpq_class> mu;
    std::vector<std::vector<mpq_class>> phi;
};

/// Exact p_k = Tr((phi diag(mu))^k) for k = 1..count. Throws ValidationError
/// unless mu sums to exactly 1 and phi is symmetric with entries in [0, 1].
std::vector<mpq_class> exact_power_sums(const RationalKernel& kernel, std::size_t count);

} // namespace vergraph
