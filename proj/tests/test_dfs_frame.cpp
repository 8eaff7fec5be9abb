#include <gtest/gtest.h>

#include "ecc/dfs_frame.hpp"
#include "ecc/generate.hpp"
#include "fixtures.hpp"
#include "param_check.hpp"

using namespace ecc;
using namespace ecc::testing;

TEST(DfsFrame, GAValues) {
    const DfsFrame f = build_dfs_frame(g_a());
    ASSERT_EQ(f.n, 4);
    for (Vertex v = 1; v <= 4; ++v) {
        EXPECT_EQ(f.vertex_of[v], v);
    }
    EXPECT_EQ(std::vector<Vertex>(f.nd.begin() + 1, f.nd.end()), (std::vector<Vertex>{4, 3, 2, 1}));
    EXPECT_EQ(f.b_count[2], 2);
    EXPECT_EQ(f.b_count[3], 3);
    EXPECT_EQ(f.b_count[4], 2);
    for (Vertex v = 2; v <= 4; ++v) {
        EXPECT_EQ(f.low1[v], 1);
    }
    EXPECT_EQ(f.l1[3], 1);
    EXPECT_EQ(f.l2[3], 3);
    EXPECT_EQ(f.kind[1], EdgeKind::kTree);
    EXPECT_EQ(f.kind[3], EdgeKind::kTree);
    EXPECT_EQ(f.kind[4], EdgeKind::kBack);
    EXPECT_EQ(f.upper[5], 4);
    EXPECT_EQ(f.lower[5], 2);
    EXPECT_EQ(f.back_edge_count, 3);
    // In(1) ascending by the upper end: e6 from 3, then e4 from 4.
    ASSERT_EQ(f.in(1).size(), 2u);
    EXPECT_EQ(f.in(1)[0].edge, 6);
    EXPECT_EQ(f.in(1)[1].edge, 4);
}

TEST(DfsFrame, ParallelPairs) {
    const DfsFrame f3 = build_dfs_frame(parallel(3));
    EXPECT_EQ(f3.b_count[2], 2);
    EXPECT_EQ(f3.l1[2], 1);
    EXPECT_EQ(f3.l2[2], 1);
    EXPECT_NE(f3.l1_edge[2], f3.l2_edge[2]);
    EXPECT_EQ(f3.low2[2], 1);

    const DfsFrame f4 = build_dfs_frame(parallel(4));
    EXPECT_EQ(f4.b_count[2], 3);
}

TEST(DfsFrame, ChildrenSortedByLow1) {
    // Root 1 with children 2 (a pendant path with back-edge to 1) and a
    // subtree without back-edges.
    const Multigraph g = make_graph(4, {{1, 2}, {1, 3}, {3, 4}, {4, 1}});
    const DfsFrame f = build_dfs_frame(g);
    ASSERT_EQ(f.children(1).size(), 2u);
    const Vertex first = f.child(1, 1);
    EXPECT_EQ(f.low1[first], 1);
    EXPECT_EQ(f.low1[f.child(1, 2)], kNoVertex);
    EXPECT_EQ(f.child(1, 3), kNoVertex);
}

TEST(DfsFrame, TreeHasNoBackEdges) {
    const DfsFrame f = build_dfs_frame(path3());
    EXPECT_EQ(f.back_edge_count, 0);
    EXPECT_EQ(f.b_count[2], 0);
    EXPECT_EQ(f.low1[3], kNoVertex);
    const ConnectivityCertificate cert = check_connectivity_necessary(f);
    EXPECT_FALSE(cert.is_2ec_certificate);
    EXPECT_FALSE(cert.passes_3ec_necessary);
}

TEST(DfsFrame, CertificateOnCycleAndGA) {
    const ConnectivityCertificate c4_cert = check_connectivity_necessary(build_dfs_frame(c4()));
    EXPECT_TRUE(c4_cert.is_2ec_certificate);
    EXPECT_FALSE(c4_cert.passes_3ec_necessary);
    const ConnectivityCertificate ga_cert = check_connectivity_necessary(build_dfs_frame(g_a()));
    EXPECT_TRUE(ga_cert.passes_3ec_necessary);
}

TEST(DfsFrame, SelfLoopsAreIgnored) {
    const Multigraph g = make_graph(2, {{1, 1}, {1, 2}, {2, 2}, {2, 1}});
    const DfsFrame f = build_dfs_frame(g);
    EXPECT_EQ(f.kind[1], EdgeKind::kLoop);
    EXPECT_EQ(f.kind[3], EdgeKind::kLoop);
    EXPECT_EQ(f.b_count[2], 1);
}

TEST(DfsFrame, DisconnectedInputRejected) {
    const Multigraph g = make_graph(3, {{1, 2}});
    EXPECT_THROW(build_dfs_frame(g), PreconditionError);
}

TEST(DfsFrame, NonDefaultRoot) {
    const DfsFrame f = build_dfs_frame(g_a(), 3);
    EXPECT_EQ(f.root, 3);
    EXPECT_EQ(f.vertex_of[1], 3);
    EXPECT_EQ(f.pre_of[3], 1);
}

TEST(DfsFrame, RandomConnectedGraphsMatchDefinitions) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto n = static_cast<std::int32_t>(2 + seed % 9);
        const std::int32_t m = n - 1 + static_cast<std::int32_t>(seed % 13);
        const Multigraph g = generate_connected_graph(n, m, seed);
        const ParamCheck check = check_params(g);
        ASSERT_TRUE(check.mismatch.empty()) << check.mismatch << '\n' << format_graph(g);
    }
}

TEST(DfsFrame, DeepPathDoesNotOverflowStack) {
    const std::int32_t n = 200000;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({v, v + 1});
    }
    edges.push_back({n, 1});
    const DfsFrame f = build_dfs_frame(Multigraph(n, std::move(edges)));
    EXPECT_EQ(f.depth[n], n - 1);
    EXPECT_EQ(f.b_count[n], 1);
}
