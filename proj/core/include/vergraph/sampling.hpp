#pragma once

// Seeded samplers.
//
// Randomness comes from StreamRng, a SplitMix64 sequence whose starting state
// is a bijective mix of (seed, stream). Given the same SeedSpec every sampler
// consumes the same draws in the same order on every platform:
//   * verg_finite: n type draws (vertex 1..n), then one uniform per pair in
//     edge_index order;
//   * erg / gerg: one uniform per pair in edge_index order;
//   * coinflip: a single uniform.
// An edge with probability q is present iff its uniform u in [0,1) has u < q.
// Batch estimators give sample s the SeedSpec returned by
// SeedSpec::substream(s), so counts never depend on evaluation order.

#include "vergraph/models.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace vergraph {

struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    /// Independent child stream for the index-th sample of a batch.
    SeedSpec substream(std::uint64_t index) const;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

class StreamRng {
public:
    explicit StreamRng(SeedSpec seed);

    std::uint64_t next();
    /// 53-bit uniform in [0, 1).
    double uniform();
    /// Unbiased integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// 53-bit uniform in [0, 1) taken from the high bits of `bits`.
double unit_interval(std::uint64_t bits);

/// Index drawn from a probability vector by inverse CDF; zero-mass entries
/// are never returned.
std::size_t draw_index(std::span<const double> weights, double u);

/// Edge indicator vector (edge_index order) of one sample; any n >= 1.
std::vector<bool> sample_edges(const ModelSpec& spec, SeedSpec seed);

/// One sample as a GraphId; requires n <= kMaxGraphIdVertices.
GraphId sample_model(const ModelSpec& spec, SeedSpec seed);

GraphId to_graph_id(int n, const std::vector<bool>& edges);

/// Per-GraphId sample counts over G_n.
struct SampleCounts {
    int n = 0;
    std::uint64_t samples = 0;
    std::vector<std::uint64_t> counts;

    Distribution normalized() const;
};

SampleCounts sample_counts(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed);

/// Empirical law of `samples` draws (sample s uses seed.substream(s)).
Distribution empirical_distribution(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed);

} // namespace vergraph
