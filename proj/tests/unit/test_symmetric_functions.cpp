#include "vergraph/budget.hpp"
#include "vergraph/spectral.hpp"
#include "vergraph/symmetric_functions.hpp"

#include "test_kernels.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace vergraph;

TEST(PowerSums, Values)
{
    const std::vector<double> v{0.9, 0.4, 0.1};
    const auto p = power_sums(v, 3);
    EXPECT_NEAR(p[0], 1.4, 1e-15);
    EXPECT_NEAR(p[1], 0.98, 1e-15);
    EXPECT_NEAR(p[2], 0.794, 1e-15);
}

TEST(Newton, Examples)
{
    const std::vector<double> twos{2.0, 2.0};
    EXPECT_EQ(power_sums_to_elementary(twos), (std::vector<double>{2.0, 1.0}));

    const double c = 0.7;
    const std::vector<double> single{c, c * c, c * c * c};
    const auto e1 = power_sums_to_elementary(single);
    EXPECT_DOUBLE_EQ(e1[0], c);
    EXPECT_NEAR(e1[1], 0.0, 1e-15);
    EXPECT_NEAR(e1[2], 0.0, 1e-15);

    const std::vector<double> p{1.4, 0.98, 0.794};
    const auto e = power_sums_to_elementary(p);
    EXPECT_NEAR(e[0], 1.4, 1e-15);
    EXPECT_NEAR(e[1], 0.49, 1e-15);
    EXPECT_NEAR(e[2], 0.036, 1e-15);
}

TEST(Newton, ExactRational)
{
    const std::vector<mpq_class> p{mpq_class(7, 5), mpq_class(49, 50), mpq_class(397, 500)};
    const auto e = power_sums_to_elementary(std::span<const mpq_class>(p));
    EXPECT_EQ(e[0], mpq_class(7, 5));
    EXPECT_EQ(e[1], mpq_class(49, 100));
    EXPECT_EQ(e[2], mpq_class(9, 250));
}

TEST(RootRecovery, Examples)
{
    const std::vector<double> p{1.4, 0.98, 0.794};
    const auto r = recover_eigen_multiset(p, 3);
    ASSERT_EQ(r.size(), 3U);
    EXPECT_NEAR(r[0], 0.9, 1e-9);
    EXPECT_NEAR(r[1], 0.4, 1e-9);
    EXPECT_NEAR(r[2], 0.1, 1e-9);

    const std::vector<double> single{0.3, 0.09};
    const auto s = recover_eigen_multiset(single, 1);
    ASSERT_EQ(s.size(), 1U);
    EXPECT_DOUBLE_EQ(s[0], 0.3);

    EXPECT_THROW(recover_eigen_multiset(single, 3), ValidationError);
}

TEST(RootRecovery, ComplexRootsAreIllConditioned)
{
    // z^2 + 1: e1 = 0, e2 = 1.
    const std::vector<double> e{0.0, 1.0};
    EXPECT_THROW(roots_from_elementary(e), IllConditioned);
}

TEST(RootRecovery, RandomRoundTrip)
{
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::uniform_int_distribution<int> size(1, 5);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v;
        const int k = size(rng);
        while (static_cast<int>(v.size()) < k) {
            const double x = unit(rng);
            if (std::all_of(v.begin(), v.end(), [&](double y) { return std::abs(x - y) >= 0.02; })) {
                v.push_back(x);
            }
        }
        std::sort(v.rbegin(), v.rend());
        const auto r = recover_eigen_multiset(power_sums(v, k), k);
        for (int i = 0; i < k; ++i) {
            worst = std::max(worst, std::abs(r[i] - v[i]));
        }
    }
    EXPECT_LT(worst, 1e-6);
}

TEST(ClusterMultiset, GroupsNearEqualValues)
{
    const std::vector<double> v{0.5, 0.5 - 1e-8, 0.3, 0.1, 0.1 + 1e-9};
    std::vector<double> sorted = v;
    std::sort(sorted.rbegin(), sorted.rend());
    const auto c = cluster_multiset(sorted);
    ASSERT_EQ(c.size(), 3U);
    EXPECT_EQ(c[0].second, 2);
    EXPECT_EQ(c[1].second, 1);
    EXPECT_EQ(c[2].second, 2);
    EXPECT_NEAR(c[0].first, 0.5, 1e-8);
}

TEST(ExactPowerSums, MatchesSpectrum)
{
    const RationalKernel k{{mpq_class(1, 2), mpq_class(1, 2)},
                           {{mpq_class(1, 5), mpq_class(4, 5)}, {mpq_class(4, 5), mpq_class(2, 5)}}};
    const auto p = exact_power_sums(k, 4);
    EXPECT_EQ(p[0], mpq_class(3, 10));
    EXPECT_EQ(p[1], mpq_class(37, 100));
    EXPECT_EQ(p[2], mpq_class(153, 1000));
    EXPECT_EQ(p[3], mpq_class(977, 10000));
    const auto e = power_sums_to_elementary(std::span<const mpq_class>(p).first(2));
    EXPECT_EQ(e[1], mpq_class(-7, 50));
}

TEST(ExactPowerSums, Validation)
{
    const RationalKernel bad_mu{{mpq_class(1, 2), mpq_class(1, 3)}, {{0, 0}, {0, 0}}};
    EXPECT_THROW(exact_power_sums(bad_mu, 2), ValidationError);
    const RationalKernel asym{{mpq_class(1, 2), mpq_class(1, 2)},
                              {{mpq_class(0), mpq_class(1, 3)}, {mpq_class(1, 4), mpq_class(0)}}};
    EXPECT_THROW(exact_power_sums(asym, 2), ValidationError);
}

TEST(ExactPowerSums, NearDegenerateRecovery)
{
    // Two eigenvalues 1e-4 apart; exact Newton keeps e_2 free of cancellation.
    const RationalKernel k{{mpq_class(1, 2), mpq_class(1, 2)},
                           {{mpq_class(5001, 10000), mpq_class(0)}, {mpq_class(0), mpq_class(5, 10)}}};
    const auto p = exact_power_sums(k, 2);
    const auto e = power_sums_to_elementary(std::span<const mpq_class>(p));
    EXPECT_EQ(e[1], mpq_class(5001, 20000) * mpq_class(1, 4));
    const std::vector<double> ed{e[0].get_d(), e[1].get_d()};
    const auto r = roots_from_elementary(ed);
    EXPECT_NEAR(r[0], 5001.0 / 20000.0, 1e-9);
    EXPECT_NEAR(r[1], 0.25, 1e-9);
}
