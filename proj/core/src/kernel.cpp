#include "vergraph/kernel.hpp"

#include "vergraph/budget.hpp"

#include <cmath>
#include <sstream>

namespace vergraph {

namespace {

std::string entry(const char* name, std::size_t i, std::size_t j)
{
    std::ostringstream os;
    os << name << '[' << i << "][" << j << ']';
    return os.str();
}

} // namespace

FiniteKernel::FiniteKernel(std::vector<double> mu, const std::vector<std::vector<double>>& phi)
    : mu_(std::move(mu))
{
    const std::size_t b = mu_.size();
    if (b == 0) {
        throw ValidationError("mu: need at least one type");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < b; ++i) {
        if (!std::isfinite(mu_[i]) || mu_[i] < 0.0) {
            throw ValidationError("mu[" + std::to_string(i) + "]: must be a nonnegative number");
        }
        total += mu_[i];
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "mu must sum to 1 (sum=" << total << ")";
        throw ValidationError(os.str());
    }
    if (phi.size() != b) {
        throw ValidationError("phi: expected " + std::to_string(b) + " rows, got " +
                              std::to_string(phi.size()));
    }
    for (std::size_t i = 0; i < b; ++i) {
        if (phi[i].size() != b) {
            throw ValidationError("phi[" + std::to_string(i) + "]: expected " + std::to_string(b) +
                                  " columns, got " + std::to_string(phi[i].size()));
        }
    }
    phi_.resize(b * b);
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            const double v = phi[i][j];
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw ValidationError(entry("phi", i, j) + ": must lie in [0, 1]");
            }
            if (j > i && std::abs(v - phi[j][i]) > kMassTolerance) {
                std::ostringstream os;
                os.precision(17);
                os << entry("phi", i, j) << ": asymmetric (" << v << " vs " << entry("phi", j, i)
                   << "=" << phi[j][i] << ")";
                throw ValidationError(os.str());
            }
            // Store the upper triangle on both sides.
            phi_[i * b + j] = i <= j ? v : phi[j][i];
        }
    }
}

FiniteKernel FiniteKernel::constant(double p) { return FiniteKernel({1.0}, {{p}}); }

FiniteKernel FiniteKernel::reduced() const
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < types(); ++i) {
        if (mu_[i] > 0.0) {
            keep.push_back(i);
        }
    }
    if (keep.size() == types()) {
        return *this;
    }
    FiniteKernel out;
    out.mu_.reserve(keep.size());
    out.phi_.reserve(keep.size() * keep.size());
    for (std::size_t i : keep) {
        out.mu_.push_back(mu_[i]);
        for (std::size_t j : keep) {
            out.phi_.push_back(phi(i, j));
        }
    }
    return out;
}

bool FiniteKernel::is_binary() const
{
    for (std::size_t i = 0; i < types(); ++i) {
        for (std::size_t j = 0; j < types(); ++j) {
            const double v = phi(i, j);
            if (mu_[i] > 0.0 && mu_[j] > 0.0 && v != 0.0 && v != 1.0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<double>> FiniteKernel::phi_rows() const
{
    std::vector<std::vector<double>> rows(types(), std::vector<double>(types()));
    for (std::size_t i = 0; i < types(); ++i) {
        for (std::size_t j = 0; j < types(); ++j) {
            rows[i][j] = phi(i, j);
        }
    }
    return rows;
}

} // namespace vergraph
