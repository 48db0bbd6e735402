#pragma once

// Vertex random graph approximating a finite-type VERG.
//
// Each vertex carries y = (x, f, a): a type x ~ mu, a uniform vector
// f in [0,1]^M and a slot a uniform on [M]. Vertices i, j with a_i < a_j are
// adjacent iff phi(x_i, x_j) >= f_i(a_j) (symmetrically when a_j < a_i);
// equal slots are never adjacent. Conditioned on distinct slots the law is
// exactly the VERG, and slots repeat with probability at most n^2 / (2M),
// so the total variation distance is at most n^2 / M.

#include "vergraph/kernel.hpp"
#include "vergraph/models.hpp"
#include "vergraph/sampling.hpp"

#include <cstdint>
#include <vector>

namespace vergraph {

/// Smallest integer M with M > n^2 / eps; 0 < eps <= 1.
std::uint64_t choose_slot_count(int n, double eps);

struct RepetitionProbability {
    /// 1 - M^(falling n) / M^n.
    double exact = 0.0;
    /// n^2 / (2M).
    double bound = 0.0;
    /// exact <= bound (vacuously true when bound > 1).
    bool within_bound = true;
};

RepetitionProbability repetition_probability(int n, std::uint64_t slots);

struct VrgApproxSpec {
    FiniteKernel kernel;
    std::uint64_t slots = 1; // M
    int n = 1;
};

VrgApproxSpec build_vrg_approx(const FiniteKernel& kernel, int n, std::uint64_t slots);

/// Adjacency rule between (x1, f1, a1) and (x2, f2, a2), given the two
/// coordinates it can read: f1(a2) and f2(a1).
bool slot_adjacent(double phi, std::uint64_t a1, std::uint64_t a2, double f1_at_a2, double f2_at_a1);

/// Ordered set partitions of [n] as block labels: label[i] is the rank of
/// vertex i's slot value among the distinct values; labels cover 0..d-1.
std::vector<std::vector<int>> ordered_set_partitions(int n);

/// C(M, d) / M^n: the probability that a uniform slot vector realizes one
/// given ordered set partition with d blocks.
double partition_weight(std::uint64_t slots, int n, int blocks);

enum class SlotPatterns {
    all,
    /// Only repetition-free slot vectors, renormalized by their probability.
    distinct_only,
};

inline constexpr std::uint64_t kDefaultApproxBudget = 10'000'000;

/// Exact law of the approximating VRG, summing over type vectors and ordered
/// set partitions. Within a partition every vertex i and later block B share
/// a single uniform f_i(a_B), so the block's present/absent pattern has
/// probability max(0, min_present phi - max_absent phi) (min over none = 1,
/// max over none = 0); distinct (i, B) groups are independent.
Distribution approx_exact_distribution(const VrgApproxSpec& spec,
                                       SlotPatterns patterns = SlotPatterns::all,
                                       int cap = kDefaultExactVertices);

/// Edge indicators of one draw. Types use the first n uniforms, slots the
/// next n draws; f_i(c) is a pure function of (seed, i, c), so a coordinate
/// read twice yields the same uniform.
std::vector<bool> sample_vrg_approx_edges(const VrgApproxSpec& spec, SeedSpec seed);

GraphId sample_vrg_approx(const VrgApproxSpec& spec, SeedSpec seed);

Distribution empirical_vrg_approx(const VrgApproxSpec& spec, std::uint64_t samples, SeedSpec seed);

} // namespace vergraph
