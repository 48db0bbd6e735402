#include "vergraph/sampling.hpp"

#include "vergraph/budget.hpp"

#include <string>

namespace vergraph {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::vector<bool> draw_independent(std::span<const double> edge_probs, StreamRng& rng)
{
    std::vector<bool> edges(edge_probs.size());
    for (std::size_t e = 0; e < edge_probs.size(); ++e) {
        edges[e] = rng.uniform() < edge_probs[e];
    }
    return edges;
}

} // namespace

std::uint64_t mix64(std::uint64_t x)
{
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SeedSpec SeedSpec::substream(std::uint64_t index) const
{
    return {mix64(seed ^ mix64(stream + kGolden)), index};
}

StreamRng::StreamRng(SeedSpec seed) : state_(mix64(mix64(seed.seed) ^ seed.stream)) {}

std::uint64_t StreamRng::next()
{
    state_ += kGolden;
    return mix64(state_);
}

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

double StreamRng::uniform() { return unit_interval(next()); }

std::uint64_t StreamRng::below(std::uint64_t bound)
{
    if (bound == 0) {
        throw ValidationError("StreamRng::below: bound must be >= 1");
    }
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

std::size_t draw_index(std::span<const double> weights, double u)
{
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        cumulative += weights[i];
        if (u < cumulative) {
            return i;
        }
    }
    return last_positive;
}

std::vector<bool> sample_edges(const ModelSpec& spec, SeedSpec seed)
{
    validate(spec);
    const int n = spec.n;
    StreamRng rng(seed);
    return std::visit(
        [&](const auto& m) -> std::vector<bool> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErgModel>) {
                const std::vector<double> probs(pair_count(n), m.p);
                return draw_independent(probs, rng);
            } else if constexpr (std::is_same_v<T, GergModel>) {
                std::vector<double> probs;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        probs.push_back(m.pmatrix[i][j]);
                    }
                }
                return draw_independent(probs, rng);
            } else if constexpr (std::is_same_v<T, CoinFlipModel>) {
                const bool all = rng.uniform() < m.p;
                return std::vector<bool>(pair_count(n), all);
            } else {
                const FiniteKernel& k = m.kernel;
                std::vector<std::size_t> types(n);
                for (int i = 0; i < n; ++i) {
                    types[i] = draw_index(k.mu(), rng.uniform());
                }
                std::vector<double> probs;
                probs.reserve(pair_count(n));
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        probs.push_back(k.phi(types[i], types[j]));
                    }
                }
                return draw_independent(probs, rng);
            }
        },
        spec.model);
}

GraphId to_graph_id(int n, const std::vector<bool>& edges)
{
    GraphId g{n, 0};
    validate(g);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e]) {
            g.id |= std::uint64_t{1} << e;
        }
    }
    return g;
}

GraphId sample_model(const ModelSpec& spec, SeedSpec seed)
{
    if (spec.n > kMaxGraphIdVertices) {
        throw ValidationError("sample_model: n=" + std::to_string(spec.n) +
                              " does not fit a GraphId; use sample_edges");
    }
    return to_graph_id(spec.n, sample_edges(spec, seed));
}

Distribution SampleCounts::normalized() const
{
    Distribution d{n, std::vector<double>(counts.size(), 0.0)};
    for (std::size_t g = 0; g < counts.size(); ++g) {
        d.probs[g] = static_cast<double>(counts[g]) / static_cast<double>(samples);
    }
    return d;
}

SampleCounts sample_counts(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed)
{
    if (samples == 0) {
        throw ValidationError("samples must be >= 1");
    }
    const std::uint64_t graphs = graph_count(spec.n);
    SampleCounts out{spec.n, samples, std::vector<std::uint64_t>(graphs, 0)};
    for (std::uint64_t s = 0; s < samples; ++s) {
        ++out.counts[sample_model(spec, seed.substream(s)).id];
    }
    return out;
}

Distribution empirical_distribution(const ModelSpec& spec, std::uint64_t samples, SeedSpec seed)
{
    return sample_counts(spec, samples, seed).normalized();
}

} // namespace vergraph
