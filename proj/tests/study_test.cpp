#include <pvoc/error.hpp>
#include <pvoc/io.hpp>
#include <pvoc/louvain.hpp>
#include <pvoc/study.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace pvoc;

namespace {

const std::filesystem::path fixtures = PVOC_FIXTURE_DIR;

// ids: v=0 a=1 b=2 c=3 d=4
Graph butterfly() { return build_graph({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }
Cover butterfly_truth() { return Cover::from_communities(5, {{0, 1, 2}, {0, 3, 4}}); }

Partition assign(std::vector<CommunityId> labels) { return Partition::from_assignment(labels); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST(Strip, DisjointTruthIdentity) {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    Partition p = assign({0, 0, 0, 1, 1, 1});
    auto r = strip_overlap_study(g, Cover::from_partition(p), p);
    EXPECT_EQ(r.removed_count, 0u);
    EXPECT_EQ(r.kept_count, 6u);
    EXPECT_NEAR(r.nmi, 1.0, 1e-12);
}

TEST(Strip, Butterfly) {
    auto r = strip_overlap_study(butterfly(), butterfly_truth(), assign({0, 0, 0, 1, 1}));
    EXPECT_EQ(r.removed_count, 1u);
    EXPECT_EQ(r.kept_count, 4u);
    EXPECT_EQ(r.n_truth_comms, 2u);
    EXPECT_EQ(r.n_detected_comms, 2u);
    EXPECT_NEAR(r.nmi, 1.0, 1e-12);
}

TEST(Strip, EverythingOverlaps) {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
    Cover truth = Cover::from_communities(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(kind_of([&] { strip_overlap_study(g, truth, assign({0, 0, 0})); }), ErrorKind::DegenerateStudy);
}

TEST(Strip, UncoveredVerticesExcluded) {
    Cover truth = Cover::from_communities(5, {{0, 1, 2}, {0, 3}}, Cover::Coverage::AllowPartial);
    auto r = strip_overlap_study(butterfly(), truth, assign({0, 0, 0, 1, 1}));
    EXPECT_EQ(r.removed_count, 1u);
    EXPECT_EQ(r.excluded_count, 1u);
    EXPECT_EQ(r.kept_count, 3u);
}

TEST(Strip, LfrFixture) {
    const auto dir = fixtures / "lfr_n1000_mu02";
    Graph g = read_edge_list(dir / "network.dat");
    auto in = open_input(dir / "community.dat");
    Cover truth = read_lfr_communities(in, g.labels());
    auto r = strip_overlap_study(g, truth, louvain(g));
    EXPECT_GT(r.removed_count, 0u);
    EXPECT_GE(r.nmi, 0.85);
}

TEST(Sample, ButterflyIsWholeGraph) {
    Graph g = butterfly();
    auto s = sample_subnetwork(g, butterfly_truth(), 42);
    EXPECT_EQ(s.seed_vertex, 0u);
    EXPECT_EQ(s.vertices, (std::vector<VertexId>{0, 1, 2, 3, 4}));
    EXPECT_EQ(s.graph, g);
    EXPECT_TRUE(same_communities(s.truth, butterfly_truth()));
}

TEST(Sample, UnionOfSeedCommunities) {
    // x=0 y=1 u=2 z=3 w=4
    Graph g = build_graph({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    Cover truth = Cover::from_communities(5, {{0, 1, 2}, {2, 3}, {4}});
    auto s = sample_subnetwork(g, truth, 1);
    EXPECT_EQ(s.seed_vertex, 2u);
    EXPECT_EQ(s.vertices, (std::vector<VertexId>{0, 1, 2, 3}));
    EXPECT_EQ(s.graph.num_edges(), 4u);
    EXPECT_EQ(s.truth.num_communities(), 2u);
}

TEST(Sample, NoOverlapVertex) {
    Graph g = butterfly();
    EXPECT_EQ(kind_of([&] { sample_subnetwork(g, Cover::from_partition(assign({0, 0, 0, 1, 1})), 1); }),
              ErrorKind::NoOverlapVertex);
}

TEST(Sample, ReproducibleAndClosed) {
    const auto dir = fixtures / "lfr_n1000_mu01";
    Graph g = read_edge_list(dir / "network.dat");
    auto in = open_input(dir / "community.dat");
    Cover truth = read_lfr_communities(in, g.labels());
    std::size_t distinct_seeds = 0;
    std::vector<bool> seen(g.num_vertices(), false);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto a = sample_subnetwork(g, truth, seed);
        auto b = sample_subnetwork(g, truth, seed);
        ASSERT_EQ(a.seed_vertex, b.seed_vertex);
        ASSERT_EQ(a.vertices, b.vertices);
        ASSERT_EQ(a.graph, b.graph);
        ASSERT_EQ(a.truth, b.truth);
        if (!seen[a.seed_vertex]) {
            seen[a.seed_vertex] = true;
            ++distinct_seeds;
        }
        ASSERT_GE(truth.memberships(a.seed_vertex).size(), 2u);
        ASSERT_TRUE(std::binary_search(a.vertices.begin(), a.vertices.end(), a.seed_vertex));
        for (CommunityId c : truth.memberships(a.seed_vertex))
            for (VertexId v : truth.members(c))
                ASSERT_TRUE(std::binary_search(a.vertices.begin(), a.vertices.end(), v));
        for (VertexId v : a.vertices) {
            bool shares = false;
            for (CommunityId c : truth.memberships(v))
                for (CommunityId k : truth.memberships(a.seed_vertex))
                    shares = shares || c == k;
            ASSERT_TRUE(shares);
        }
    }
    EXPECT_GT(distinct_seeds, 1u);
}

TEST(Profile, AllInternal) {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    Partition p = assign({0, 0, 0, 1, 1, 1});
    Cover truth = Cover::from_communities(6, {{0, 1, 2}, {3, 4, 5}, {2, 3}});
    for (const auto& row : external_degree_membership_profile(g, truth, p)) {
        EXPECT_EQ(row.mean_external, 0.0);
        EXPECT_EQ(row.stddev_external, 0.0);
    }
}

TEST(Profile, Butterfly) {
    auto rows = external_degree_membership_profile(butterfly(), butterfly_truth(), assign({0, 0, 0, 1, 1}));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].memberships, 2u);
    EXPECT_EQ(rows[1].vertices, 1u);
    EXPECT_EQ(rows[1].mean_external, 2.0);
    EXPECT_EQ(rows[1].stddev_external, 0.0);
    EXPECT_EQ(rows[0].vertices, 4u);
    EXPECT_EQ(rows[0].mean_external, 0.5);
    EXPECT_EQ(rows[0].stddev_external, 0.5);
}

TEST(Profile, MonotoneConstruction) {
    // three triangles; vertex 2 reaches two other triangles, 3 and 6 reach one
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}, {2, 3}, {2, 6}});
    Partition p = assign({0, 0, 0, 1, 1, 1, 2, 2, 2});
    Cover truth = Cover::from_communities(9, {{0, 1, 2, 3, 6}, {2, 3, 4, 5}, {2, 6, 7, 8}});
    auto rows = external_degree_membership_profile(g, truth, p);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_LT(rows[i - 1].mean_external, rows[i].mean_external);
}

TEST(Writers, Tables) {
    std::ostringstream a;
    write_profile(a, {{2, 1, 2.0, 0.0}});
    EXPECT_EQ(a.str(), "memberships\tvertices\tmean_external_degree\tstddev\n2\t1\t2\t0\n");
    std::ostringstream b;
    write_strip_result(b, {1, 0, 4, 1.0, 2, 2});
    EXPECT_EQ(b.str(), "removed\texcluded\tkept\tnmi\ttruth_communities\tdetected_communities\n1\t0\t4\t1\t2\t2\n");
}
