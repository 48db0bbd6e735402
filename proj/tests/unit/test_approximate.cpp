#include "vergraph/budget.hpp"
#include "vergraph/approximate.hpp"
#include "vergraph/metrics.hpp"
#include "vergraph/models.hpp"

#include "test_kernels.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace vergraph;
using vergraph::testing::kstar;
using vergraph::testing::random_kernel;
using vergraph::testing::random_kernel_upto;

namespace {

// Reference law of the slot construction by direct enumeration of type
// vectors and slot vectors in [M]^n. Each (vertex i, slot value c) group
// shares one uniform u; the group's pattern is constant on each interval
// between consecutive breakpoints {0, 1, phi values}.
Distribution slot_vector_oracle(const FiniteKernel& k, int n, std::uint64_t slots)
{
    const std::size_t b = k.types();
    const std::size_t graphs = std::size_t{1} << pair_count(n);
    Distribution out{n, std::vector<double>(graphs, 0.0)};

    std::vector<std::size_t> t(n, 0);
    std::vector<std::uint64_t> a(n, 0);
    std::size_t type_vectors = 1;
    std::size_t slot_vectors = 1;
    for (int i = 0; i < n; ++i) {
        type_vectors *= b;
        slot_vectors *= slots;
    }
    for (std::size_t tc = 0; tc < type_vectors; ++tc) {
        double wt = 1.0;
        for (int i = 0, rest = static_cast<int>(tc); i < n; ++i, rest /= static_cast<int>(b)) {
            t[i] = rest % b;
            wt *= k.mu(t[i]);
        }
        if (wt == 0.0) {
            continue;
        }
        for (std::size_t ac = 0; ac < slot_vectors; ++ac) {
            std::size_t rest = ac;
            for (int i = 0; i < n; ++i) {
                a[i] = rest % slots;
                rest /= slots;
            }
            std::map<std::pair<int, std::uint64_t>, std::vector<int>> groups;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (a[i] < a[j]) {
                        groups[{i, a[j]}].push_back(j);
                    }
                }
            }
            std::map<std::uint64_t, double> law{{0, 1.0}};
            for (const auto& [key, members] : groups) {
                const int i = key.first;
                std::set<double> cuts{0.0, 1.0};
                for (int j : members) {
                    cuts.insert(k.phi(t[i], t[j]));
                }
                std::map<std::uint64_t, double> next;
                for (auto lo = cuts.begin(), hi = std::next(cuts.begin()); hi != cuts.end(); ++lo, ++hi) {
                    std::uint64_t mask = 0;
                    for (int j : members) {
                        if (k.phi(t[i], t[j]) >= *hi) {
                            mask |= std::uint64_t{1} << edge_index(n, std::min(i, j) + 1, std::max(i, j) + 1);
                        }
                    }
                    for (const auto& [g, p] : law) {
                        next[g | mask] += p * (*hi - *lo);
                    }
                }
                law = std::move(next);
            }
            const double w = wt / static_cast<double>(slot_vectors);
            for (const auto& [g, p] : law) {
                out.probs[g] += w * p;
            }
        }
    }
    return out;
}

void expect_close(const Distribution& a, const Distribution& b, double tol)
{
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
        EXPECT_NEAR(a.probs[g], b.probs[g], tol) << "graph " << g;
    }
}

} // namespace

TEST(ChooseSlotCount, Examples)
{
    EXPECT_EQ(choose_slot_count(4, 0.05), 321U);
    EXPECT_EQ(choose_slot_count(2, 1.0), 5U);
    EXPECT_EQ(choose_slot_count(4, 0.25), 65U);
    EXPECT_EQ(choose_slot_count(3, 0.7), 13U);
    EXPECT_EQ(choose_slot_count(7, 0.07), 701U);
    EXPECT_THROW(choose_slot_count(4, 0.0), ValidationError);
    EXPECT_THROW(choose_slot_count(4, 1.5), ValidationError);
}

TEST(RepetitionProbability, Examples)
{
    const auto r = repetition_probability(4, 64);
    EXPECT_DOUBLE_EQ(r.exact, 0.09108734130859375);
    EXPECT_DOUBLE_EQ(r.bound, 0.125);
    EXPECT_TRUE(r.within_bound);
    for (std::uint64_t m : {2U, 5U, 100U}) {
        const auto two = repetition_probability(2, m);
        EXPECT_NEAR(two.exact, 1.0 / m, 1e-15);
        EXPECT_NEAR(two.bound, 2.0 / m, 1e-15);
    }
    const auto pigeon = repetition_probability(3, 2);
    EXPECT_EQ(pigeon.exact, 1.0);
    EXPECT_DOUBLE_EQ(pigeon.bound, 2.25);
}

TEST(RepetitionProbability, BoundHolds)
{
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t m = 1; m <= 300; m += 7) {
            const auto r = repetition_probability(n, m);
            EXPECT_TRUE(r.within_bound);
            if (r.bound <= 1.0) {
                EXPECT_LE(r.exact, r.bound);
            }
        }
    }
}

TEST(SlotAdjacent, Rule)
{
    EXPECT_TRUE(slot_adjacent(0.5, 1, 2, 0.5, 0.9));
    EXPECT_FALSE(slot_adjacent(0.5, 1, 2, 0.51, 0.0));
    EXPECT_TRUE(slot_adjacent(0.5, 3, 2, 0.9, 0.2));
    EXPECT_FALSE(slot_adjacent(1.0, 2, 2, 0.0, 0.0));
}

TEST(OrderedSetPartitions, CountsAndWeights)
{
    const std::vector<std::size_t> fubini{1, 1, 3, 13, 75, 541, 4683};
    for (int n = 1; n <= 6; ++n) {
        const auto parts = ordered_set_partitions(n);
        EXPECT_EQ(parts.size(), fubini[n]);
        std::set<std::vector<int>> unique(parts.begin(), parts.end());
        EXPECT_EQ(unique.size(), parts.size());
        for (std::uint64_t m : {1U, 3U, 8U, 64U}) {
            double total = 0.0;
            for (const auto& labels : parts) {
                const int d = *std::max_element(labels.begin(), labels.end()) + 1;
                for (int b = 0; b < d; ++b) {
                    EXPECT_NE(std::find(labels.begin(), labels.end(), b), labels.end());
                }
                total += partition_weight(m, n, d);
            }
            EXPECT_NEAR(total, 1.0, 1e-12) << "n " << n << " M " << m;
        }
    }
}

TEST(ApproxExact, TwoVertexClosedForm)
{
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
        for (std::uint64_t m : {1U, 2U, 8U, 16U, 1000U}) {
            const auto d = approx_exact_distribution(build_vrg_approx(FiniteKernel::constant(p), 2, m));
            EXPECT_NEAR(d.probs[1], p * (1.0 - 1.0 / m), 1e-15);
            EXPECT_NEAR(tv_distance(d, erg_distribution(2, p)), p / m, 1e-12);
        }
    }
    const auto eight = approx_exact_distribution(build_vrg_approx(FiniteKernel::constant(0.5), 2, 8));
    EXPECT_DOUBLE_EQ(eight.probs[0], 9.0 / 16);
    EXPECT_DOUBLE_EQ(eight.probs[1], 7.0 / 16);
}

TEST(ApproxExact, DegenerateCases)
{
    for (int n = 1; n <= 5; ++n) {
        const auto one = approx_exact_distribution(build_vrg_approx(kstar(), n, 1));
        EXPECT_NEAR(one.probs[0], 1.0, 1e-14);
        const auto zero = approx_exact_distribution(build_vrg_approx(FiniteKernel::constant(0.0), n, 50));
        EXPECT_NEAR(zero.probs[0], 1.0, 1e-14);
    }
}

TEST(ApproxExact, FrozenOracleValues)
{
    // Frozen from tests/oracles/oracle.py (exact rationals over [M]^n).
    const auto k = kstar();
    const auto n2 = approx_exact_distribution(build_vrg_approx(k, 2, 3));
    EXPECT_NEAR(n2.probs[0], 0.63333333333333333, 1e-15);
    EXPECT_NEAR(tv_distance(n2, verg_exact_distribution(2, k)), 0.18333333333333332, 1e-15);

    const std::vector<double> m2{0.44875, 0.0925, 0.0925, 0.09125, 0.0925, 0.09125, 0.09125, 0.0};
    expect_close(approx_exact_distribution(build_vrg_approx(k, 3, 2)), Distribution{3, m2}, 1e-15);
    const std::vector<double> m4{0.2535625, 0.10425, 0.10425, 0.1254375, 0.10425, 0.1254375, 0.1254375, 0.057375};
    expect_close(approx_exact_distribution(build_vrg_approx(k, 3, 4)), Distribution{3, m4}, 1e-15);

    const auto verg3 = verg_exact_distribution(3, k);
    EXPECT_NEAR(tv_distance(approx_exact_distribution(build_vrg_approx(k, 3, 2)), verg3), 0.33675, 1e-15);
    EXPECT_NEAR(tv_distance(approx_exact_distribution(build_vrg_approx(k, 3, 3)), verg3), 0.23033333333333333,
                1e-15);
    EXPECT_NEAR(tv_distance(approx_exact_distribution(build_vrg_approx(k, 3, 4)), verg3), 0.1753125, 1e-15);

    const auto verg4 = verg_exact_distribution(4, k);
    const auto a3 = approx_exact_distribution(build_vrg_approx(k, 4, 3));
    EXPECT_NEAR(tv_distance(a3, verg4), 0.36693229629629631, 1e-14);
    EXPECT_NEAR(a3.probs[0], 0.13790074074074074, 1e-15);
    EXPECT_EQ(a3.probs[63], 0.0);
    const auto a5 = approx_exact_distribution(build_vrg_approx(k, 4, 5));
    EXPECT_NEAR(tv_distance(a5, verg4), 0.223797408, 1e-14);
    EXPECT_NEAR(a5.probs[0], 0.073543808, 1e-15);
    EXPECT_NEAR(a5.probs[63], 0.004178688, 1e-15);

    const FiniteKernel three({0.2, 0.3, 0.5}, {{0.9, 0.1, 0.5}, {0.1, 0.3, 0.7}, {0.5, 0.7, 0.15}});
    EXPECT_NEAR(tv_distance(approx_exact_distribution(build_vrg_approx(three, 3, 3)),
                            verg_exact_distribution(3, three)),
                0.21273995833333334, 1e-14);
}

TEST(ApproxExact, MatchesSlotVectorEnumeration)
{
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 12; ++trial) {
        const auto k = random_kernel_upto(rng, 3);
        const int n = 2 + trial % 3;
        const std::uint64_t m = 1 + trial % 4;
        expect_close(approx_exact_distribution(build_vrg_approx(k, n, m)), slot_vector_oracle(k, n, m), 1e-13);
    }
}

TEST(ApproxExact, DistinctSlotsReproduceVerg)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto k = random_kernel_upto(rng, 3);
        const int n = 2 + trial % 4;
        const auto d = approx_exact_distribution(build_vrg_approx(k, n, 7), SlotPatterns::distinct_only);
        expect_close(d, verg_exact_distribution(n, k), 1e-12);
    }
}

TEST(ApproxExact, TvWithinSlotBound)
{
    std::mt19937_64 rng(3);
    std::vector<FiniteKernel> kernels{FiniteKernel::constant(0.5), kstar()};
    for (int i = 0; i < 4; ++i) {
        kernels.push_back(random_kernel_upto(rng, 3));
    }
    for (const auto& k : kernels) {
        for (int n = 2; n <= 4; ++n) {
            const auto verg = verg_exact_distribution(n, k);
            for (std::uint64_t m : {16U, 64U, 256U}) {
                const auto approx = approx_exact_distribution(build_vrg_approx(k, n, m));
                EXPECT_NEAR(approx.total(), 1.0, 1e-10);
                EXPECT_TRUE(is_isomorphism_invariant(approx, 1e-12));
                EXPECT_LE(tv_distance(verg, approx), double(n * n) / double(m));
            }
        }
    }
}

TEST(ApproxExact, MonotoneInSlotCount)
{
    for (double p : {0.2, 0.5, 0.9}) {
        const auto k = FiniteKernel::constant(p);
        for (int n = 2; n <= 4; ++n) {
            const auto erg = erg_distribution(n, p);
            for (std::uint64_t m : {1U, 4U, 16U, 64U}) {
                const double tv = tv_distance(approx_exact_distribution(build_vrg_approx(k, n, m)), erg);
                const double tv4 = tv_distance(approx_exact_distribution(build_vrg_approx(k, n, 4 * m)), erg);
                EXPECT_LE(tv4, tv + 1e-12);
            }
        }
    }
}

TEST(ApproxExact, BudgetEnforced)
{
    std::mt19937_64 rng(1);
    EXPECT_THROW(approx_exact_distribution(build_vrg_approx(random_kernel(rng, 20), 6, 10)), BudgetExceeded);
    EXPECT_THROW(approx_exact_distribution(build_vrg_approx(kstar(), 7, 10)), BudgetExceeded);
    EXPECT_THROW(build_vrg_approx(kstar(), 3, 0), ValidationError);
}

TEST(SampleVrgApprox, DeterministicAndDegenerate)
{
    const auto spec = build_vrg_approx(kstar(), 6, 20);
    for (std::uint64_t s = 0; s < 20; ++s) {
        EXPECT_EQ(sample_vrg_approx(spec, {s, 2}), sample_vrg_approx(spec, {s, 2}));
    }
    const auto single = build_vrg_approx(kstar(), 6, 1);
    for (std::uint64_t s = 0; s < 20; ++s) {
        EXPECT_EQ(sample_vrg_approx(single, {s, 0}).id, 0U);
    }
    EXPECT_EQ(sample_vrg_approx_edges(build_vrg_approx(kstar(), 30, 1000), {1, 0}).size(),
              std::size_t(pair_count(30)));
}

TEST(SampleVrgApprox, ConvergesToExact)
{
    const auto spec = build_vrg_approx(kstar(), 3, 4);
    const auto emp = empirical_vrg_approx(spec, 1000000, {12, 0});
    EXPECT_LT(tv_distance(emp, approx_exact_distribution(spec)), 0.01);
}

TEST(SampleVrgApprox, LargeSlotCountApproachesErg)
{
    const auto spec = build_vrg_approx(FiniteKernel::constant(0.5), 3, 1000);
    EXPECT_LT(tv_distance(empirical_vrg_approx(spec, 1000000, {6, 0}), erg_distribution(3, 0.5)), 0.012);
}
