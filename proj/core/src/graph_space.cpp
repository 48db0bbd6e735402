#include "vergraph/graph_space.hpp"

#include "vergraph/budget.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>

namespace vergraph {

namespace {

// perm_edges[p][e] = image of edge e under the p-th vertex permutation.
std::vector<std::vector<int>> permutation_edge_maps(int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int edges = pair_count(n);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> map(edges);
        for (int e = 0; e < edges; ++e) {
            auto [i, j] = edge_pair(n, e);
            int a = perm[i - 1] + 1;
            int b = perm[j - 1] + 1;
            map[e] = edge_index(n, std::min(a, b), std::max(a, b));
        }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t relabel(std::uint64_t id, const std::vector<int>& map)
{
    std::uint64_t out = 0;
    while (id != 0) {
        int e = std::countr_zero(id);
        out |= std::uint64_t{1} << map[e];
        id &= id - 1;
    }
    return out;
}

std::uint64_t minimum_relabeling(std::uint64_t id, const std::vector<std::vector<int>>& maps)
{
    std::uint64_t best = id;
    for (const auto& map : maps) {
        best = std::min(best, relabel(id, map));
    }
    return best;
}

} // namespace

int edge_index(int n, int i, int j)
{
    if (!(1 <= i && i < j && j <= n)) {
        throw ValidationError("edge_index: need 1 <= i < j <= n, got n=" + std::to_string(n) +
                              " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

VertexPair edge_pair(int n, int index)
{
    if (index < 0 || index >= pair_count(n)) {
        throw ValidationError("edge_pair: index " + std::to_string(index) + " out of range for n=" +
                              std::to_string(n));
    }
    int i = 1;
    int row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + index};
}

void validate(const GraphId& g)
{
    if (g.n < 1 || g.n > kMaxGraphIdVertices) {
        throw ValidationError("GraphId: n=" + std::to_string(g.n) + " outside [1, " +
                              std::to_string(kMaxGraphIdVertices) + "]");
    }
    const int edges = pair_count(g.n);
    if (edges < 64 && (g.id >> edges) != 0) {
        throw ValidationError("GraphId: id " + std::to_string(g.id) + " >= 2^" + std::to_string(edges));
    }
}

std::vector<VertexPair> decode_graph(const GraphId& g)
{
    validate(g);
    std::vector<VertexPair> out;
    for (int e = 0; e < pair_count(g.n); ++e) {
        if ((g.id >> e) & 1U) {
            out.push_back(edge_pair(g.n, e));
        }
    }
    return out;
}

GraphId encode_graph(int n, std::span<const VertexPair> edges)
{
    GraphId g{n, 0};
    validate(g);
    for (auto [i, j] : edges) {
        g.id |= std::uint64_t{1} << edge_index(n, std::min(i, j), std::max(i, j));
    }
    return g;
}

std::uint64_t graph_count(int n, int cap)
{
    if (n < 1) {
        throw ValidationError("graph_count: n must be >= 1");
    }
    if (n > cap) {
        throw BudgetExceeded("graph_count: n=" + std::to_string(n) + " exceeds enumeration cap " +
                             std::to_string(cap));
    }
    return std::uint64_t{1} << pair_count(n);
}

int edge_count(const GraphId& g) { return std::popcount(g.id); }

GraphId canonical_class(const GraphId& g)
{
    validate(g);
    if (g.n > kMaxEnumerationVertices) {
        throw BudgetExceeded("canonical_class: n=" + std::to_string(g.n) + " exceeds cap " +
                             std::to_string(kMaxEnumerationVertices));
    }
    return {g.n, minimum_relabeling(g.id, permutation_edge_maps(g.n))};
}

const std::vector<std::uint32_t>& canonical_table(int n)
{
    constexpr int kTableCap = 6;
    if (n < 1 || n > kTableCap) {
        throw BudgetExceeded("canonical_table: n=" + std::to_string(n) + " outside [1, 6]");
    }
    static std::array<std::once_flag, kTableCap + 1> once;
    static std::array<std::vector<std::uint32_t>, kTableCap + 1> tables;
    std::call_once(once[n], [n] {
        const auto maps = permutation_edge_maps(n);
        const std::uint64_t count = std::uint64_t{1} << pair_count(n);
        auto& table = tables[n];
        table.resize(count);
        for (std::uint64_t id = 0; id < count; ++id) {
            table[id] = static_cast<std::uint32_t>(minimum_relabeling(id, maps));
        }
    });
    return tables[n];
}

} // namespace vergraph
