#include "vergraph/approximate.hpp"

#include "vergraph/budget.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace vergraph {

namespace {

struct GroupMember {
    std::uint32_t bit;
    double phi;
};

// Positive-probability (mask, probability) patterns of one shared-uniform
// group: with phi sorted descending, exactly the top-k prefixes can occur.
std::vector<std::pair<std::uint32_t, double>> group_patterns(std::vector<GroupMember> members)
{
    std::sort(members.begin(), members.end(),
              [](const GroupMember& a, const GroupMember& b) { return a.phi > b.phi; });
    std::vector<std::pair<std::uint32_t, double>> out;
    std::uint32_t mask = 0;
    const std::size_t m = members.size();
    for (std::size_t k = 0; k <= m; ++k) {
        const double min_present = k == 0 ? 1.0 : members[k - 1].phi;
        const double max_absent = k == m ? 0.0 : members[k].phi;
        const double prob = std::max(0.0, min_present - max_absent);
        if (prob > 0.0) {
            out.emplace_back(mask, prob);
        }
        if (k < m) {
            mask |= members[k].bit;
        }
    }
    return out;
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

double coordinate_uniform(SeedSpec seed, int vertex, std::uint64_t coordinate)
{
    const std::uint64_t key = mix64(seed.seed ^ mix64(seed.stream ^ 0xD1B54A32D192ED03ULL));
    const std::uint64_t v = mix64(key ^ mix64(static_cast<std::uint64_t>(vertex) + 0x632BE59BD9B4E019ULL));
    // (0, 1]: phi = 0 never fires and phi = 1 always does.
    return static_cast<double>((mix64(v ^ mix64(coordinate)) >> 11) + 1) * 0x1.0p-53;
}

} // namespace

std::uint64_t choose_slot_count(int n, double eps)
{
    if (!(eps > 0.0) || eps > 1.0) {
        throw ValidationError("eps must lie in (0, 1]");
    }
    if (n < 1) {
        throw ValidationError("n must be >= 1");
    }
    const double ratio = static_cast<double>(n) * n / eps;
    // Treat a ratio within rounding of an integer as that integer, so that
    // e.g. 16 / 0.05 gives 321 rather than 320.
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) <= 1e-9 * ratio) {
        return static_cast<std::uint64_t>(nearest) + 1;
    }
    return static_cast<std::uint64_t>(std::floor(ratio)) + 1;
}

RepetitionProbability repetition_probability(int n, std::uint64_t slots)
{
    if (n < 1 || slots < 1) {
        throw ValidationError("repetition_probability: need n >= 1 and M >= 1");
    }
    const double m = static_cast<double>(slots);
    double distinct = 1.0;
    for (int i = 0; i < n; ++i) {
        distinct *= (m - i) / m;
        if (distinct <= 0.0) {
            distinct = 0.0;
            break;
        }
    }
    RepetitionProbability r;
    r.exact = 1.0 - distinct;
    r.bound = static_cast<double>(n) * n / (2.0 * m);
    r.within_bound = r.bound > 1.0 || r.exact <= r.bound;
    return r;
}

VrgApproxSpec build_vrg_approx(const FiniteKernel& kernel, int n, std::uint64_t slots)
{
    if (n < 1 || slots < 1) {
        throw ValidationError("build_vrg_approx: need n >= 1 and M >= 1");
    }
    return {kernel, slots, n};
}

bool slot_adjacent(double phi, std::uint64_t a1, std::uint64_t a2, double f1_at_a2, double f2_at_a1)
{
    if (a1 < a2) {
        return phi >= f1_at_a2;
    }
    if (a2 < a1) {
        return phi >= f2_at_a1;
    }
    return false;
}

std::vector<std::vector<int>> ordered_set_partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> label(n, 0);
    std::vector<bool> used(n);
    while (true) {
        std::fill(used.begin(), used.end(), false);
        int top = 0;
        for (int l : label) {
            used[l] = true;
            top = std::max(top, l);
        }
        if (std::all_of(used.begin(), used.begin() + top + 1, [](bool u) { return u; })) {
            out.push_back(label);
        }
        int pos = n - 1;
        while (pos >= 0 && ++label[pos] == n) {
            label[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return out;
}

double partition_weight(std::uint64_t slots, int n, int blocks)
{
    if (static_cast<std::uint64_t>(blocks) > slots) {
        return 0.0;
    }
    const double m = static_cast<double>(slots);
    double w = 1.0;
    for (int i = 0; i < blocks; ++i) {
        w *= (m - i) / ((i + 1) * m);
    }
    for (int i = blocks; i < n; ++i) {
        w /= m;
    }
    return w;
}

Distribution approx_exact_distribution(const VrgApproxSpec& spec, SlotPatterns patterns, int cap)
{
    const int n = spec.n;
    graph_count(n, std::min(cap, kMaxEnumerationVertices));
    const FiniteKernel k = spec.kernel.reduced();
    const std::size_t b = k.types();

    auto partitions = ordered_set_partitions(n);
    if (patterns == SlotPatterns::distinct_only) {
        std::erase_if(partitions, [n](const std::vector<int>& label) {
            return *std::max_element(label.begin(), label.end()) + 1 != n;
        });
    }
    require_budget(saturating_mul(saturating_pow(b, static_cast<unsigned>(n)), partitions.size()),
                   kDefaultApproxBudget, "approx_exact_distribution (type vector, partition) pairs");

    std::vector<double> weights;
    weights.reserve(partitions.size());
    for (const auto& label : partitions) {
        const int blocks = *std::max_element(label.begin(), label.end()) + 1;
        weights.push_back(patterns == SlotPatterns::all
                              ? partition_weight(spec.slots, n, blocks)
                              : 1.0 / static_cast<double>(factorial(n)));
    }

    Distribution d{n, std::vector<double>(std::size_t{1} << pair_count(n), 0.0)};
    std::vector<std::size_t> types(n, 0);
    std::vector<std::pair<std::uint32_t, double>> current;
    std::vector<std::pair<std::uint32_t, double>> next;
    while (true) {
        double type_weight = 1.0;
        for (int i = 0; i < n; ++i) {
            type_weight *= k.mu(types[i]);
        }
        for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
            const double w = type_weight * weights[pi];
            if (w == 0.0) {
                continue;
            }
            const auto& label = partitions[pi];
            const int blocks = *std::max_element(label.begin(), label.end()) + 1;

            current.assign(1, {0U, w});
            for (int i = 0; i < n; ++i) {
                for (int block = label[i] + 1; block < blocks; ++block) {
                    std::vector<GroupMember> members;
                    for (int j = 0; j < n; ++j) {
                        if (label[j] == block) {
                            const int e = edge_index(n, std::min(i, j) + 1, std::max(i, j) + 1);
                            members.push_back({std::uint32_t{1} << e, k.phi(types[i], types[j])});
                        }
                    }
                    const auto group = group_patterns(std::move(members));
                    next.clear();
                    for (const auto& [mask, prob] : current) {
                        for (const auto& [gmask, gprob] : group) {
                            next.emplace_back(mask | gmask, prob * gprob);
                        }
                    }
                    current.swap(next);
                }
            }
            for (const auto& [mask, prob] : current) {
                d.probs[mask] += prob;
            }
        }

        int pos = n - 1;
        while (pos >= 0 && ++types[pos] == b) {
            types[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return d;
}

std::vector<bool> sample_vrg_approx_edges(const VrgApproxSpec& spec, SeedSpec seed)
{
    const int n = spec.n;
    if (n < 1 || spec.slots < 1) {
        throw ValidationError("sample_vrg_approx: need n >= 1 and M >= 1");
    }
    StreamRng rng(seed);
    std::vector<std::size_t> types(n);
    for (int i = 0; i < n; ++i) {
        types[i] = draw_index(spec.kernel.mu(), rng.uniform());
    }
    std::vector<std::uint64_t> slot(n);
    for (int i = 0; i < n; ++i) {
        slot[i] = rng.below(spec.slots);
    }
    std::vector<bool> edges;
    edges.reserve(pair_count(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double phi = spec.kernel.phi(types[i], types[j]);
            bool adjacent = false;
            if (slot[i] < slot[j]) {
                adjacent = slot_adjacent(phi, slot[i], slot[j], coordinate_uniform(seed, i, slot[j]), 0.0);
            } else if (slot[j] < slot[i]) {
                adjacent = slot_adjacent(phi, slot[i], slot[j], 0.0, coordinate_uniform(seed, j, slot[i]));
            }
            edges.push_back(adjacent);
        }
    }
    return edges;
}

GraphId sample_vrg_approx(const VrgApproxSpec& spec, SeedSpec seed)
{
    if (spec.n > kMaxGraphIdVertices) {
        throw ValidationError("sample_vrg_approx: n=" + std::to_string(spec.n) +
                              " does not fit a GraphId");
    }
    return to_graph_id(spec.n, sample_vrg_approx_edges(spec, seed));
}

Distribution empirical_vrg_approx(const VrgApproxSpec& spec, std::uint64_t samples, SeedSpec seed)
{
    if (samples == 0) {
        throw ValidationError("samples must be >= 1");
    }
    std::vector<std::uint64_t> counts(graph_count(spec.n), 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        ++counts[sample_vrg_approx(spec, seed.substream(s)).id];
    }
    SampleCounts tally{spec.n, samples, std::move(counts)};
    return tally.normalized();
}

} // namespace vergraph
