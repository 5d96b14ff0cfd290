#include "splitcut/errors.hpp"
#include "splitcut/graph.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace splitcut {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::house_graph;
using testing::sample_split_graph;

TEST(VertexSet, BasicMembership) {
    VertexSet s(130, {0, 63, 64, 129});
    EXPECT_EQ(s.count(), 4u);
    EXPECT_TRUE(s.contains(64));
    EXPECT_FALSE(s.contains(65));
    EXPECT_FALSE(s.contains(500));
    EXPECT_EQ(s.complement().count(), 126u);
    EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 63, 64, 129}));
    s.erase(63);
    EXPECT_EQ(s.count(), 3u);
    EXPECT_THROW(s.insert(130), PreconditionError);
}

TEST(VertexSet, MixedUniversesRejected) {
    EXPECT_THROW((void)VertexSet(3).intersect_count(VertexSet(4)), PreconditionError);
}

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
}

TEST(Graph, EdgeCountIsHalfDegreeSum) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testing::random_graph(1 + trial % 17, 0.4, rng);
        std::size_t degrees = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            degrees += g.degree(v);
            for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
        }
        EXPECT_EQ(degrees, 2 * g.num_edges());
    }
}

TEST(CutSize, SingleEdge) {
    const Graph k2(2, {{0, 1}});
    EXPECT_EQ(cut_size(k2, Cut(VertexSet(2, {0}), VertexSet(2, {1}))), 1u);
}

TEST(CutSize, HouseCut) {
    // ({v1, v3, v5}, {v2, v4})
    EXPECT_EQ(cut_size(house_graph(), Cut(VertexSet(5, {0, 2, 4}), VertexSet(5, {1, 3}))), 5u);
}

TEST(CutSize, SampleSplitCut) {
    // ({v1, v2, u3, u4, u5}, {v3, v4, v5, u1, u2})
    const Cut cut(VertexSet(10, {0, 1, 7, 8, 9}), VertexSet(10, {2, 3, 4, 5, 6}));
    EXPECT_EQ(cut_size(sample_split_graph(), cut), 14u);
}

TEST(CutSize, InvalidPartitions) {
    EXPECT_THROW(Cut(VertexSet(3, {0, 1}), VertexSet(3, {1, 2})), InvalidPartition);
    EXPECT_THROW(Cut(VertexSet(3, {0}), VertexSet(3, {2})), InvalidPartition);
    EXPECT_THROW((void)cut_size(house_graph(), Cut::from_side1(VertexSet(4, {0}))), InvalidPartition);
}

TEST(CutSize, SymmetryAndEdgeAccounting) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 15;
        const Graph g = testing::random_graph(n, 0.5, rng);
        VertexSet side1(n);
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1U) side1.insert(v);
        const Cut cut = Cut::from_side1(side1);
        const std::size_t size = cut_size(g, cut);
        EXPECT_EQ(size, cut_size(g, cut.swapped()));
        EXPECT_EQ(size, testing::count_crossing(g, side1));
        EXPECT_EQ(size + edges_within(g, cut.side1()) + edges_within(g, cut.side2()), g.num_edges());
    }
}

TEST(CutSize, AdditiveOverComponents) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(12, 0.12, rng);
        const Cut cut = Cut::from_side1(VertexSet::from_vector(12, {0, 2, 3, 7, 11}));
        std::size_t sum = 0;
        for (const auto &component : connected_components(g)) {
            const auto sub = induced_subgraph(g, component);
            VertexSet local(sub.to_parent.size());
            for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
                if (cut.side1().contains(sub.to_parent[i])) local.insert(static_cast<Vertex>(i));
            sum += cut_size(sub.graph, Cut::from_side1(local));
        }
        EXPECT_EQ(sum, cut_size(g, cut));
    }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(complete_graph(3)).num_edges(), 0u);
    EXPECT_EQ(complement(cycle_graph(4)).edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
    // v1v3, v1v4, v2v4, v3v5
    EXPECT_EQ(complement(house_graph()).edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}, {2, 4}}));
}

TEST(Complement, Involution) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(trial % 20, 0.3, rng);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Components, Examples) {
    const auto isolated = connected_components(Graph(3, {}));
    ASSERT_EQ(isolated.size(), 3u);
    EXPECT_EQ(isolated[1], VertexSet(3, {1}));

    const auto pairs = connected_components(Graph(4, {{0, 1}, {2, 3}}));
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0], VertexSet(4, {0, 1}));
    EXPECT_EQ(pairs[1], VertexSet(4, {2, 3}));

    const auto sample = connected_components(sample_split_graph());
    ASSERT_EQ(sample.size(), 1u);
    EXPECT_EQ(sample[0].count(), 10u);
}

TEST(Components, EdgesStayInsideAndOrderIsBySmallestMember) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(16, 0.1, rng);
        const auto comps = connected_components(g);
        std::vector<int> owner(16, -1);
        Vertex last_min = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const auto members = comps[c].members();
            if (c > 0) EXPECT_GT(members.front(), last_min);
            last_min = members.front();
            for (Vertex v : members) {
                EXPECT_EQ(owner[v], -1);
                owner[v] = static_cast<int>(c);
            }
        }
        for (int o : owner) EXPECT_NE(o, -1);
        for (const auto &[u, v] : g.edges()) EXPECT_EQ(owner[u], owner[v]);
    }
}

TEST(CliqueAndIndependence, Examples) {
    EXPECT_TRUE(is_clique(complete_graph(3), VertexSet::full(3)));
    EXPECT_TRUE(is_independent_set(cycle_graph(4), VertexSet(4, {0, 2})));
    EXPECT_FALSE(is_independent_set(cycle_graph(4), VertexSet(4, {0, 1})));
    EXPECT_TRUE(is_clique(sample_split_graph(), testing::sample_clique()));
    EXPECT_TRUE(is_independent_set(sample_split_graph(), testing::sample_independent()));
    EXPECT_FALSE(is_clique(sample_split_graph(), VertexSet(10, {0, 5, 6})));
}

TEST(CliqueAndIndependence, EmptyAndSingletonsAreBoth) {
    const Graph g = cycle_graph(5);
    EXPECT_TRUE(is_clique(g, VertexSet(5)));
    EXPECT_TRUE(is_independent_set(g, VertexSet(5)));
    EXPECT_TRUE(is_clique(g, VertexSet(5, {3})));
    EXPECT_TRUE(is_independent_set(g, VertexSet(5, {3})));
}

} // namespace
} // namespace splitcut
