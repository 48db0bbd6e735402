#pragma once

// Bitmask encoding of simple graphs on the vertex set {1, ..., n}.
//
// Bit `edge_index(n, i, j)` of a GraphId is set iff the edge {i, j} is
// present; pairs are ranked lexicographically:
//   (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vergraph {

/// Largest n for which graph-space enumeration is offered (2^21 graphs).
inline constexpr int kMaxEnumerationVertices = 7;
/// Default cap for callers that materialize a full probability vector.
inline constexpr int kDefaultExactVertices = 6;
/// Largest n whose edge set fits in a 64-bit GraphId.
inline constexpr int kMaxGraphIdVertices = 11;

using VertexPair = std::pair<int, int>;

struct GraphId {
    int n = 0;
    std::uint64_t id = 0;

    friend bool operator==(const GraphId&, const GraphId&) = default;
    friend auto operator<=>(const GraphId&, const GraphId&) = default;
};

/// C(n, 2).
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic rank of the 1-based pair (i, j), i < j <= n.
int edge_index(int n, int i, int j);

/// Inverse of edge_index.
VertexPair edge_pair(int n, int index);

/// Throws ValidationError unless 1 <= g.n <= kMaxGraphIdVertices and g.id < 2^C(n,2).
void validate(const GraphId& g);

/// Present edges, sorted by index.
std::vector<VertexPair> decode_graph(const GraphId& g);

GraphId encode_graph(int n, std::span<const VertexPair> edges);

/// 2^C(n,2). Throws BudgetExceeded when n > cap.
std::uint64_t graph_count(int n, int cap = kMaxEnumerationVertices);

int edge_count(const GraphId& g);

/// Minimum id over all n! relabelings of g. Requires n <= kMaxEnumerationVertices.
GraphId canonical_class(const GraphId& g);

/// canonical_class(id) for every id in G_n, cached per n. Requires n <= 6.
const std::vector<std::uint32_t>& canonical_table(int n);

} // namespace vergraph
