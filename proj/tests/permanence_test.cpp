#include <pvoc/error.hpp>
#include <pvoc/permanence.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pvoc;

namespace {

Graph butterfly() {
    // ids: v=0 a=1 b=2 c=3 d=4
    return build_graph({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Partition assign(std::vector<CommunityId> labels) { return Partition::from_assignment(labels); }

// v=0 with internal triangle {1,2,3} and external pairs {4,5}, {6,7}, {8,9}.
Graph pull_gadget() {
    return build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}});
}

} // namespace

TEST(InternalClustering, Triangle) {
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 3}});
    EXPECT_EQ(internal_clustering(g, assign({0, 0, 0, 0}), 0), 1.0);
}

TEST(InternalClustering, OneOfThreePairs) {
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    EXPECT_DOUBLE_EQ(internal_clustering(g, assign({0, 0, 0, 0}), 0), 1.0 / 3.0);
}

TEST(InternalClustering, SingleInternalNeighbor) {
    Graph g = build_graph({{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(internal_clustering(g, assign({0, 0, 1}), 0), 0.0);
}

TEST(InternalClustering, IgnoresForeignNeighbors) {
    Graph g = build_graph({{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    EXPECT_DOUBLE_EQ(internal_clustering(g, assign({0, 0, 1, 0}), 0), 0.0);
}

TEST(ExternalPull, MaxOfCounts) {
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
    auto pull = external_pull(g, assign({0, 1, 1, 2, 2, 2, 2}), 0);
    ASSERT_TRUE(pull.e_max);
    EXPECT_EQ(*pull.e_max, 4u);
    ASSERT_EQ(pull.per_community.size(), 2u);
    EXPECT_EQ(pull.per_community[0].second, 2u);
    EXPECT_EQ(pull.per_community[1].second, 4u);
}

TEST(ExternalPull, EvenSplit) {
    Graph g = pull_gadget();
    auto pull = external_pull(g, assign({0, 0, 0, 0, 1, 1, 2, 2, 3, 3}), 0);
    EXPECT_EQ(pull.e_max, std::optional<std::size_t>(2));
    EXPECT_EQ(pull.per_community.size(), 3u);
}

TEST(ExternalPull, InternalVertex) {
    Graph g = build_graph({{0, 1}, {1, 2}});
    auto pull = external_pull(g, assign({0, 0, 0}), 1);
    EXPECT_FALSE(pull.e_max.has_value());
    EXPECT_TRUE(pull.per_community.empty());
}

TEST(Permanence, PullGadgetIsOneSixth) {
    Graph g = pull_gadget();
    Partition p = assign({0, 0, 0, 0, 1, 1, 2, 2, 3, 3});
    auto view = permanence_view(g, AssignmentView(p), 0);
    EXPECT_EQ(view.internal, 3u);
    EXPECT_EQ(view.degree, 9u);
    EXPECT_EQ(view.c_in, 1.0);
    EXPECT_NEAR(permanence(g, p, 0), 1.0 / 6.0, 1e-15);
}

TEST(Permanence, CliqueVertexIsOne) {
    Graph g = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(permanence(g, assign({0, 0, 0, 0}), 2), 1.0);
}

TEST(Permanence, NoInternalNeighborIsMinusOne) {
    Graph g = build_graph({{0, 1}, {0, 2}});
    EXPECT_EQ(permanence(g, assign({0, 1, 1}), 0), -1.0);
    // singleton community takes the same path
    EXPECT_EQ(permanence(g, assign({0, 1, 2}), 0), -1.0);
}

TEST(Permanence, IsolatedVertexThrows) {
    VertexLabels labels;
    labels.intern("x");
    labels.intern("y");
    labels.intern("z");
    Graph g = build_graph_internal(labels, {{0, 1}});
    try {
        permanence(g, assign({0, 0, 0}), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IsolatedVertex);
    }
}

TEST(Permanence, ButterflyValues) {
    Graph g = butterfly();
    Partition p = assign({0, 0, 0, 1, 1});
    EXPECT_EQ(permanence(g, p, 0), 0.25);
    EXPECT_EQ(permanence(g, p, 1), 1.0);
    EXPECT_EQ(permanence(g, p, 2), 1.0);
    EXPECT_EQ(permanence(g, p, 3), -0.5);
    EXPECT_EQ(permanence(g, p, 4), -0.5);
}

TEST(NeighborhoodSum, Butterfly) {
    Graph g = butterfly();
    EXPECT_EQ(neighborhood_permanence_sum(g, assign({0, 0, 0, 1, 1}), 0), 1.25);
}

TEST(NeighborhoodSum, Triangle) {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
    for (VertexId v = 0; v < 3; ++v)
        EXPECT_EQ(neighborhood_permanence_sum(g, assign({0, 0, 0}), v), 3.0);
}

TEST(NeighborhoodSum, IsolatedEdge) {
    Graph g = build_graph({{0, 1}});
    EXPECT_EQ(permanence(g, assign({0, 0}), 0), 0.0);
    EXPECT_EQ(neighborhood_permanence_sum(g, assign({0, 0}), 0), 0.0);
}

TEST(Permanence, MatchesBruteForce) {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracle::random_graph(20 + rng() % 80, 0.05 + 0.25 * static_cast<double>(t) / 30.0, rng);
        Partition p = oracle::random_partition(g.num_vertices(), 1 + rng() % 8, rng);
        auto adj = oracle::dense(g);
        std::vector<CommunityId> comm(p.assignment().begin(), p.assignment().end());
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            EXPECT_NEAR(permanence(g, p, v), oracle::permanence(adj, comm, v), 1e-12);
            EXPECT_NEAR(neighborhood_permanence_sum(g, p, v), oracle::neighborhood_sum(adj, comm, v), 1e-12);
        }
    }
}

TEST(Permanence, RangeAndInternalRule) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracle::random_graph(60, 0.1, rng);
        Partition p = oracle::random_partition(g.num_vertices(), 1 + t % 5, rng);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            auto view = permanence_view(g, AssignmentView(p), v);
            EXPECT_GE(view.perm, -1.0);
            EXPECT_LE(view.perm, 1.0);
            EXPECT_EQ(view.perm, permanence(g, p, v));
            if (!view.e_max)
                EXPECT_EQ(view.perm, internal_clustering(g, p, v));
        }
    }
}

TEST(Permanence, Locality) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(50, 0.12, rng);
        Partition p = oracle::random_partition(g.num_vertices(), 4, rng);
        const VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
        const CommunityId target = static_cast<CommunityId>((p.community_of(v) + 1) % p.num_communities());
        AssignmentView base(p);
        AssignmentView moved = base.with_move(v, target);
        std::vector<bool> near(g.num_vertices(), false);
        near[v] = true;
        for (VertexId u : g.neighbors(v))
            near[u] = true;
        for (VertexId u = 0; u < g.num_vertices(); ++u)
            if (!near[u])
                EXPECT_EQ(permanence(g, base, u), permanence(g, moved, u));
    }
}

TEST(Permanence, ViewMatchesMaterializedMove) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracle::random_graph(40, 0.15, rng);
        Partition p = oracle::random_partition(g.num_vertices(), 3, rng);
        const VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
        std::vector<CommunityId> labels(p.assignment().begin(), p.assignment().end());
        labels[v] = 99;
        Partition q = Partition::from_assignment(labels);
        AssignmentView moved = AssignmentView(p).with_move(v, 99);
        for (VertexId u = 0; u < g.num_vertices(); ++u)
            EXPECT_EQ(permanence(g, moved, u), permanence(g, q, u));
    }
}
