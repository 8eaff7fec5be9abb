#include <gtest/gtest.h>

#include "ecc/decompose.hpp"
#include "ecc/generate.hpp"
#include "ecc/oracle.hpp"

using namespace ecc;

TEST(Generate3ec, TwoVerticesGivesThreeParallelEdges) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Multigraph g = generate_3ec_graph(2, 3, seed);
        ASSERT_EQ(g.edge_count(), 3);
        for (const Edge& e : g.edges()) {
            EXPECT_FALSE(e.is_loop());
        }
    }
}

TEST(Generate3ec, SmallGraphIsThreeEdgeConnectedByOracle) {
    const Multigraph g = generate_3ec_graph(4, 6, 7);
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 6);
    EXPECT_EQ(oracle::kecc_partition_oracle(g, 3).size(), 1u);
}

TEST(Generate3ec, InfeasibleEdgeCount) {
    EXPECT_THROW(generate_3ec_graph(10, 14, 1), PreconditionError);
    EXPECT_THROW(generate_3ec_graph(1, 5, 1), PreconditionError);
    EXPECT_NO_THROW(generate_3ec_graph(10, 15, 1));
}

TEST(Generate3ec, DeterministicPerSeed) {
    const std::string a = format_graph(generate_3ec_graph(9, 20, 42));
    const std::string b = format_graph(generate_3ec_graph(9, 20, 42));
    const std::string c = format_graph(generate_3ec_graph(9, 20, 43));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(Generate3ec, CorpusAgreesWithOracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto n = static_cast<std::int32_t>(3 + seed % 8);
        const std::int32_t m = (3 * n + 1) / 2 + static_cast<std::int32_t>(seed % 5);
        const Multigraph g = generate_3ec_graph(n, m, seed);
        ASSERT_EQ(g.edge_count(), m);
        ASSERT_EQ(oracle::kecc_partition_oracle(g, 3).size(), 1u) << format_graph(g);
    }
}

TEST(Generate3ec, LargeSparseGraphUsesSkeleton) {
    const Multigraph g = generate_3ec_graph(5000, 7500, 3);
    EXPECT_EQ(g.edge_count(), 7500);
    EXPECT_TRUE(is_3ec(g));
}

TEST(GenerateConnected, IsConnected) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Multigraph g = generate_connected_graph(8, 7 + static_cast<std::int32_t>(seed % 6), seed);
        EXPECT_EQ(connected_components(g).size(), 1u);
    }
    EXPECT_THROW(generate_connected_graph(5, 3, 1), PreconditionError);
}

TEST(GenerateGeneral, ProducesLoopsAndDisconnectedGraphs) {
    int loops = 0;
    int disconnected = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Multigraph g = generate_general_graph(6, 5, seed);
        for (const Edge& e : g.edges()) {
            loops += e.is_loop() ? 1 : 0;
        }
        disconnected += connected_components(g).size() > 1 ? 1 : 0;
    }
    EXPECT_GT(loops, 0);
    EXPECT_GT(disconnected, 0);
}
