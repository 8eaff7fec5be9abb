#include <gtest/gtest.h>

#include <array>
#include <sstream>

#include "ecc/multigraph.hpp"
#include "ecc/oracle.hpp"
#include "fixtures.hpp"

using namespace ecc;
using ecc::testing::g_a;
using ecc::testing::make_graph;

namespace {

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string parse_error_text(std::string_view text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ParseGraph, ParallelEdgesKeepFileOrderIds) {
    const Multigraph g = parse_graph("p 2 3\ne 1 2\ne 1 2\ne 1 2\n");
    ASSERT_EQ(g.vertex_count(), 2);
    ASSERT_EQ(g.edge_count(), 3);
    for (EdgeId id = 1; id <= 3; ++id) {
        EXPECT_EQ(g.edge(id).a, 1);
        EXPECT_EQ(g.edge(id).b, 2);
    }
    ASSERT_EQ(g.incidences(1).size(), 3u);
    EXPECT_EQ(g.incidences(1)[0].edge, 1);
    EXPECT_EQ(g.incidences(1)[2].edge, 3);
}

TEST(ParseGraph, GAFromText) {
    const Multigraph g = parse_graph("p 4 6\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 4 2\ne 3 1\n");
    const Multigraph want = g_a();
    ASSERT_EQ(g.edge_count(), want.edge_count());
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        EXPECT_EQ(g.edge(id).a, want.edge(id).a);
        EXPECT_EQ(g.edge(id).b, want.edge(id).b);
    }
}

TEST(ParseGraph, CommentsAndBlankLines) {
    const Multigraph g = parse_graph("# a comment\n\np 3 2\n  \ne 1 2\n# between\ne 2 3\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2);
}

TEST(ParseGraph, SelfLoopHasOneIncidence) {
    const Multigraph g = parse_graph("p 2 2\ne 1 1\ne 1 2\n");
    EXPECT_TRUE(g.edge(1).is_loop());
    EXPECT_EQ(g.incidences(1).size(), 2u);
    EXPECT_EQ(g.incidences(2).size(), 1u);
}

TEST(ParseGraph, EndpointOutOfRange) {
    EXPECT_EQ(parse_error_line("p 2 1\ne 1 3\n"), 2u);
    EXPECT_NE(parse_error_text("p 2 1\ne 1 3\n").find("endpoint out of range"), std::string::npos);
    EXPECT_EQ(parse_error_line("p 2 1\ne 0 1\n"), 2u);
}

TEST(ParseGraph, HeaderErrors) {
    EXPECT_NE(parse_error_text("p 2\ne 1 2\n").find("malformed header"), std::string::npos);
    EXPECT_NE(parse_error_text("p x 1\n").find("expected an integer"), std::string::npos);
    EXPECT_NE(parse_error_text("p 2 0\np 2 0\n").find("duplicate header"), std::string::npos);
    EXPECT_NE(parse_error_text("e 1 2\n").find("edge before header"), std::string::npos);
    EXPECT_NE(parse_error_text("").find("missing header"), std::string::npos);
    EXPECT_NE(parse_error_text("p 2 1\nq 1 2\n").find("unknown line type"), std::string::npos);
}

TEST(ParseGraph, EdgeCountMismatch) {
    EXPECT_NE(parse_error_text("p 2 2\ne 1 2\n").find("edge-count mismatch"), std::string::npos);
    EXPECT_EQ(parse_error_line("p 2 1\ne 1 2\ne 1 2\n"), 3u);
}

TEST(ParseGraph, FormatRoundTrip) {
    const Multigraph g = make_graph(3, {{1, 2}, {2, 2}, {3, 1}, {1, 2}});
    const Multigraph back = parse_graph(format_graph(g, "round trip"));
    ASSERT_EQ(back.edge_count(), g.edge_count());
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        EXPECT_EQ(back.edge(id).a, g.edge(id).a);
        EXPECT_EQ(back.edge(id).b, g.edge(id).b);
    }
    EXPECT_EQ(format_graph(g).rfind("p 3 4\n", 0), 0u);
}

TEST(ReadGraphFile, MissingFileIsParseError) {
    EXPECT_THROW(read_graph_file("/nonexistent/definitely/missing.graph"), ParseError);
}

TEST(Partition, CanonicalFromLabels) {
    const std::array<std::int64_t, 6> labels{0, 7, 3, 7, 9, 3};
    const Partition p = Partition::from_labels(labels);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.classes[0], (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(p.classes[1], (std::vector<Vertex>{2, 5}));
    EXPECT_EQ(p.classes[2], (std::vector<Vertex>{4}));
    EXPECT_TRUE(p.same_class(2, 5));
    EXPECT_FALSE(p.same_class(1, 4));
    EXPECT_EQ(Partition::singletons(3).size(), 3u);
}

TEST(ContractClasses, MergingBackEdgeEndpointsOfGA) {
    const Multigraph g = g_a();
    const std::array<std::int64_t, 5> labels{0, 10, 20, 30, 10};
    const Contraction c = contract_classes(g, labels);
    EXPECT_EQ(c.graph.vertex_count(), 3);
    EXPECT_EQ(c.map.edge_map, (std::vector<EdgeId>{0, 1, 2, 3, 5, 6}));
    EXPECT_EQ(c.map.vertex_map, (std::vector<Vertex>{0, 1, 2, 3, 1}));
    // e5 = (4, 2) becomes a second edge between the merged vertex and 2.
    EXPECT_EQ(c.graph.edge(4).a, 1);
    EXPECT_EQ(c.graph.edge(4).b, 2);
}

TEST(ContractClasses, IdentityIsACopy) {
    const Multigraph g = ecc::testing::prism();
    std::vector<std::int64_t> labels{0, 1, 2, 3, 4, 5, 6};
    const Contraction c = contract_classes(g, labels);
    ASSERT_EQ(c.graph.edge_count(), g.edge_count());
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        EXPECT_EQ(c.map.edge_map[static_cast<std::size_t>(id)], id);
        EXPECT_EQ(c.graph.edge(id).a, g.edge(id).a);
    }
}

TEST(ContractClasses, PreservesCutsAvoidingMergedEdges) {
    // Contracting the endpoints of e4 in G_A: a 3-cut of the result maps to
    // a 3-cut of G_A (merging only removes cuts, never adds them).
    const Multigraph g = g_a();
    const std::array<std::int64_t, 5> labels{0, 1, 2, 3, 1};
    const Contraction c = contract_classes(g, labels);
    for (const auto& t : oracle::brute_3cuts(c.graph)) {
        std::array<EdgeId, 3> mapped{};
        for (int i = 0; i < 3; ++i) {
            mapped[static_cast<std::size_t>(i)] = c.map.edge_map[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        }
        EXPECT_TRUE(is_disconnected_after_removal(g, mapped));
    }
}

TEST(InducedSubgraph, KeepsInnerEdgesWithOrigins) {
    const Multigraph g = g_a();
    const std::array<Vertex, 3> verts{4, 2, 3};
    const Subgraph s = induced_subgraph(g, verts);
    EXPECT_EQ(s.graph.vertex_count(), 3);
    EXPECT_EQ(s.origin_vertex, (std::vector<Vertex>{0, 4, 2, 3}));
    EXPECT_EQ(s.origin_edge, (std::vector<EdgeId>{0, 2, 3, 5}));
}

TEST(Connectivity, RemovalAndComponents) {
    const Multigraph g = g_a();
    const std::array<EdgeId, 3> star1{1, 4, 6};
    const std::array<EdgeId, 3> not_cut{1, 2, 3};
    EXPECT_TRUE(is_disconnected_after_removal(g, star1));
    EXPECT_FALSE(is_disconnected_after_removal(g, not_cut));
    const std::array<EdgeId, 1> unknown{7};
    EXPECT_THROW(is_disconnected_after_removal(g, unknown), std::invalid_argument);

    const Multigraph two = make_graph(5, {{1, 2}, {3, 4}, {4, 5}, {5, 5}});
    const Partition cc = connected_components(two);
    ASSERT_EQ(cc.size(), 2u);
    EXPECT_EQ(cc.classes[1], (std::vector<Vertex>{3, 4, 5}));

    std::vector<char> mask(5, 0);
    mask[3] = 1;
    EXPECT_EQ(components_without(two, mask).size(), 3u);
}
