#include "vergraph/symmetric_functions.hpp"

#include "vergraph/budget.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace vergraph {

namespace {

template <typename T>
std::vector<T> newton(std::span<const T> p)
{
    const std::size_t K = p.size();
    std::vector<T> e(K + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        T acc = 0;
        for (std::size_t m = 1; m <= k; ++m) {
            const T term = e[k - m] * p[m - 1];
            if (m % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e[k] = acc / static_cast<T>(static_cast<long>(k));
    }
    e.erase(e.begin());
    return e;
}

} // namespace

std::vector<double> power_sums(std::span<const double> values, std::size_t count)
{
    std::vector<double> p(count, 0.0);
    for (double v : values) {
        double power = 1.0;
        for (std::size_t m = 0; m < count; ++m) {
            power *= v;
            p[m] += power;
        }
    }
    return p;
}

std::vector<double> power_sums_to_elementary(std::span<const double> power_sums)
{
    return newton(power_sums);
}

std::vector<mpq_class> power_sums_to_elementary(std::span<const mpq_class> power_sums)
{
    return newton(power_sums);
}

std::vector<double> roots_from_elementary(std::span<const double> elementary, double imag_tol)
{
    const auto K = static_cast<Eigen::Index>(elementary.size());
    if (K == 0) {
        return {};
    }
    // Monic z^K + c_{K-1} z^{K-1} + ... + c_0 with c_{K-k} = (-1)^k e_k; the
    // companion matrix has -c in its first row and ones on the subdiagonal.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(K, K);
    for (Eigen::Index k = 1; k <= K; ++k) {
        const double c = (k % 2 == 0 ? 1.0 : -1.0) * elementary[k - 1];
        companion(0, k - 1) = -c;
    }
    companion.diagonal(-1).setOnes();

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw IllConditioned("companion eigensolver did not converge");
    }
    std::vector<double> roots;
    roots.reserve(K);
    for (Eigen::Index i = 0; i < K; ++i) {
        const std::complex<double> z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) > imag_tol) {
            throw IllConditioned("recovered root " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                                 std::to_string(z.imag()) + "i is not real");
        }
        roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> recover_eigen_multiset(std::span<const double> power_sums, std::size_t K,
                                           double imag_tol)
{
    if (power_sums.size() < K) {
        throw ValidationError("recover_eigen_multiset: need " + std::to_string(K) +
                              " power sums, got " + std::to_string(power_sums.size()));
    }
    const auto e = power_sums_to_elementary(power_sums.first(K));
    return roots_from_elementary(e, imag_tol);
}

std::vector<std::pair<double, int>> cluster_multiset(std::span<const double> sorted_desc, double tol)
{
    std::vector<std::pair<double, int>> out;
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < sorted_desc.size(); ++i) {
        if (count > 0 && sorted_desc[i - 1] - sorted_desc[i] > tol) {
            out.emplace_back(sum / count, count);
            sum = 0.0;
            count = 0;
        }
        sum += sorted_desc[i];
        ++count;
    }
    if (count > 0) {
        out.emplace_back(sum / count, count);
    }
    return out;
}

std::vector<mpq_class> exact_power_sums(const RationalKernel& kernel, std::size_t count)
{
    const std::size_t b = kernel.mu.size();
    if (b == 0 || kernel.phi.size() != b) {
        throw ValidationError("rational kernel: shape mismatch");
    }
    mpq_class total = 0;
    for (const auto& m : kernel.mu) {
        if (m < 0) {
            throw ValidationError("rational kernel: negative mu");
        }
        total += m;
    }
    if (total != 1) {
        throw ValidationError("mu must sum to 1");
    }
    for (std::size_t i = 0; i < b; ++i) {
        if (kernel.phi[i].size() != b) {
            throw ValidationError("rational kernel: phi row " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t j = 0; j < b; ++j) {
            if (kernel.phi[i][j] < 0 || kernel.phi[i][j] > 1 || kernel.phi[i][j] != kernel.phi[j][i]) {
                throw ValidationError("rational kernel: phi[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "] invalid");
            }
        }
    }

    // T = phi diag(mu); power = T^k, accumulated by repeated multiplication.
    std::vector<std::vector<mpq_class>> t(b, std::vector<mpq_class>(b));
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            t[i][j] = kernel.phi[i][j] * kernel.mu[j];
        }
    }
    auto power = t;
    std::vector<mpq_class> sums;
    for (std::size_t k = 1; k <= count; ++k) {
        if (k > 1) {
            std::vector<std::vector<mpq_class>> next(b, std::vector<mpq_class>(b));
            for (std::size_t i = 0; i < b; ++i) {
                for (std::size_t l = 0; l < b; ++l) {
                    for (std::size_t j = 0; j < b; ++j) {
                        next[i][j] += power[i][l] * t[l][j];
                    }
                }
            }
            power = std::move(next);
        }
        mpq_class trace = 0;
        for (std::size_t i = 0; i < b; ++i) {
            trace += power[i][i];
        }
        sums.push_back(trace);
    }
    return sums;
}

} // namespace vergraph
