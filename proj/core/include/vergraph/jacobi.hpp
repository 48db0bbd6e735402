#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vergraph {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

    /// Writes v at (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double v)
    {
        data_[i * dim_ + j] = v;
        data_[j * dim_ + i] = v;
    }

private:
    std::size_t dim_;
    std::vector<double> data_;
};

/// Eigenvalues by cyclic Jacobi rotations, sorted descending. Sweeps until
/// the off-diagonal mass underflows relative to the diagonal (or 100 sweeps).
std::vector<double> jacobi_eigenvalues(SymmetricMatrix a);

} // namespace vergraph
