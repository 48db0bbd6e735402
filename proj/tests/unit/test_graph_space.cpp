#include "vergraph/budget.hpp"
#include "vergraph/graph_space.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

using namespace vergraph;

TEST(EdgeIndex, LexicographicRank)
{
    EXPECT_EQ(edge_index(4, 1, 2), 0);
    EXPECT_EQ(edge_index(4, 3, 4), 5);
    EXPECT_EQ(edge_index(5, 2, 4), 5);
}

TEST(EdgeIndex, RejectsBadPairs)
{
    EXPECT_THROW(edge_index(4, 2, 2), ValidationError);
    EXPECT_THROW(edge_index(4, 3, 2), ValidationError);
    EXPECT_THROW(edge_index(4, 1, 5), ValidationError);
    EXPECT_THROW(edge_index(4, 0, 2), ValidationError);
}

TEST(EdgeIndex, BijectionUpToSeven)
{
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> seen;
        int expected = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const int e = edge_index(n, i, j);
                EXPECT_EQ(e, expected++) << "lexicographic order n=" << n;
                EXPECT_EQ(edge_pair(n, e), (VertexPair{i, j}));
                seen.push_back(e);
            }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), pair_count(n));
    }
}

TEST(DecodeGraph, Examples)
{
    EXPECT_EQ(decode_graph({3, 7}), (std::vector<VertexPair>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_TRUE(decode_graph({3, 0}).empty());
    EXPECT_EQ(decode_graph({4, 33}), (std::vector<VertexPair>{{1, 2}, {3, 4}}));
}

TEST(DecodeGraph, RoundTripsThroughEncode)
{
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t id = 0; id < graph_count(n); ++id) {
            const auto edges = decode_graph({n, id});
            EXPECT_EQ(encode_graph(n, edges), (GraphId{n, id}));
        }
    }
}

TEST(DecodeGraph, RejectsOutOfRangeId)
{
    EXPECT_THROW(decode_graph({3, 8}), ValidationError);
    EXPECT_THROW(decode_graph({0, 0}), ValidationError);
}

TEST(GraphCount, Values)
{
    EXPECT_EQ(graph_count(1), 1U);
    EXPECT_EQ(graph_count(3), 8U);
    EXPECT_EQ(graph_count(4), 64U);
    EXPECT_EQ(graph_count(7), 1U << 21);
    EXPECT_THROW(graph_count(8), BudgetExceeded);
    EXPECT_THROW(graph_count(5, 4), BudgetExceeded);
}

TEST(CanonicalClass, Examples)
{
    EXPECT_EQ(canonical_class({3, 7}).id, 7U);
    const std::vector<VertexPair> e23{{2, 3}};
    const std::vector<VertexPair> e12{{1, 2}};
    EXPECT_EQ(canonical_class(encode_graph(3, e23)), encode_graph(3, e12));
}

TEST(CanonicalClass, ElevenClassesOnFourVertices)
{
    std::set<std::uint64_t> classes;
    for (std::uint64_t id = 0; id < 64; ++id) {
        classes.insert(canonical_class({4, id}).id);
    }
    EXPECT_EQ(classes.size(), 11U);
}

TEST(CanonicalClass, KnownClassCounts)
{
    // Unlabeled graph counts 1, 2, 4, 11, 34, 156.
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const auto& table = canonical_table(n);
        std::set<std::uint32_t> classes(table.begin(), table.end());
        EXPECT_EQ(classes.size(), expected[n - 1]) << "n=" << n;
    }
}

TEST(CanonicalClass, IdempotentMinimalAndEdgePreserving)
{
    for (int n = 1; n <= 5; ++n) {
        const auto& table = canonical_table(n);
        for (std::uint64_t id = 0; id < table.size(); ++id) {
            const GraphId g{n, id};
            const GraphId c = canonical_class(g);
            ASSERT_EQ(c.id, table[id]);
            EXPECT_EQ(canonical_class(c), c);
            EXPECT_LE(c.id, id);
            EXPECT_EQ(edge_count(c), edge_count(g));
        }
    }
}

TEST(CanonicalClass, SevenVerticesSingleCall)
{
    // Path 1-2-3 relabels to the lexicographically smallest path: edges (1,2),(1,3).
    const std::vector<VertexPair> path{{5, 6}, {6, 7}};
    const std::vector<VertexPair> smallest{{1, 2}, {1, 3}};
    EXPECT_EQ(canonical_class(encode_graph(7, path)), encode_graph(7, smallest));
}
