#include "vergraph/jacobi.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using vergraph::jacobi_eigenvalues;
using vergraph::SymmetricMatrix;

TEST(Jacobi, Diagonal)
{
    SymmetricMatrix a(3);
    a(0, 0) = 0.2;
    a(1, 1) = -0.5;
    a(2, 2) = 0.9;
    EXPECT_EQ(jacobi_eigenvalues(a), (std::vector<double>{0.9, 0.2, -0.5}));
}

TEST(Jacobi, TwoByTwo)
{
    SymmetricMatrix a(2);
    a(0, 0) = 0.1;
    a(1, 1) = 0.2;
    a.set(0, 1, 0.4);
    const auto ev = jacobi_eigenvalues(a);
    EXPECT_NEAR(ev[0], (0.3 + std::sqrt(0.65)) / 2, 1e-15);
    EXPECT_NEAR(ev[1], (0.3 - std::sqrt(0.65)) / 2, 1e-15);
}

TEST(Jacobi, Empty)
{
    EXPECT_TRUE(jacobi_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST(Jacobi, AgreesWithEigen)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::size_t dim : {1U, 3U, 8U, 20U, 64U}) {
        SymmetricMatrix a(dim);
        Eigen::MatrixXd e(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i; j < dim; ++j) {
                const double v = unit(rng);
                a.set(i, j, v);
                e(i, j) = e(j, i) = v;
            }
        }
        const auto mine = jacobi_eigenvalues(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
        std::vector<double> ref(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
        std::sort(ref.rbegin(), ref.rend());
        ASSERT_EQ(mine.size(), dim);
        for (std::size_t i = 0; i < dim; ++i) {
            EXPECT_NEAR(mine[i], ref[i], 1e-12) << "dim " << dim << " i " << i;
        }
    }
}
