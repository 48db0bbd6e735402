#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vergraph {

/// Finite type space [b] with type law `mu` and symmetric edge kernel `phi`
/// (a stochastic blockmodel with multinomial random blocks).
///
/// Invariants, checked on construction: b >= 1; mu >= 0 and sums to 1
/// within 1e-12; phi is b x b, symmetric within 1e-12 and valued in [0, 1].
class FiniteKernel {
public:
    static constexpr double kMassTolerance = 1e-12;

    FiniteKernel(std::vector<double> mu, const std::vector<std::vector<double>>& phi);

    /// Single type carrying phi == p (the canonical ERG representation).
    static FiniteKernel constant(double p);

    std::size_t types() const { return mu_.size(); }
    double mu(std::size_t i) const { return mu_[i]; }
    double phi(std::size_t i, std::size_t j) const { return phi_[i * mu_.size() + j]; }
    std::span<const double> mu() const { return mu_; }

    /// Copy with all zero-mass types removed.
    FiniteKernel reduced() const;

    /// True iff every phi entry between positive-mass types is 0 or 1.
    bool is_binary() const;

    std::vector<std::vector<double>> phi_rows() const;

private:
    FiniteKernel() = default;

    std::vector<double> mu_;
    std::vector<double> phi_; // row-major b x b
};

} // namespace vergraph
