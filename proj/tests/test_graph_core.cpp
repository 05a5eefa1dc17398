#include <gtest/gtest.h>

#include "support.hpp"

using namespace clawcolor;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InternalInvariant;
}

// Plain graph6 decoder for n <= 62, written against the format description.
std::vector<std::pair<int, int>> decode_small_graph6(const std::string &s) {
    const int n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b)
            bits.push_back(((s[i] - 63) >> b) & 1);
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits[static_cast<std::size_t>(k)])
                edges.emplace_back(i, j);
    return edges;
}

} // namespace

TEST(MultiGraph, TripleEdgeOnTwoVertices) {
    auto g = build_multigraph(2, std::vector<VertexPair>{{0, 1}, {0, 1}, {0, 1}});
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_EQ(g.degree(1), 3);
    EXPECT_EQ(g.multiplicity(0, 1), 3);
    EXPECT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_TRUE(is_cubic(g));
    EXPECT_FALSE(g.is_simple());
}

TEST(MultiGraph, CompleteGraphOnFour) {
    auto g = fixtures::k4();
    EXPECT_TRUE(is_cubic(g));
    EXPECT_TRUE(g.is_simple());
    EXPECT_EQ(g.size(), 6u);
}

TEST(MultiGraph, RejectsLoopsAndRange) {
    EXPECT_EQ(code_of([] { MultiGraph(1, {{0, 0}}); }), ErrorCode::LoopEdge);
    EXPECT_EQ(code_of([] { MultiGraph(2, {{0, 2}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { MultiGraph(2, {{-1, 1}}); }), ErrorCode::VertexOutOfRange);
}

TEST(MultiGraph, EdgesAreCanonical) {
    MultiGraph g(3, {{2, 0}, {0, 2}, {1, 0}});
    ASSERT_EQ(g.edges().size(), 2u);
    EXPECT_EQ(g.edges()[0].u, 0);
    EXPECT_EQ(g.edges()[0].v, 1);
    EXPECT_EQ(g.edges()[1].multiplicity, 2);
    auto inst = g.edge_instances();
    ASSERT_EQ(inst.size(), 3u);
    EXPECT_EQ(inst[1], (VertexPair{0, 2}));
    EXPECT_EQ(inst[2], (VertexPair{0, 2}));
    EXPECT_EQ(g, MultiGraph(3, {{0, 1}, {0, 2}, {2, 0}}));
}

TEST(Distances, SmallCases) {
    auto k4 = all_pairs_distances(fixtures::k4());
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
    MultiGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(all_pairs_distances(path)(0, 3), 3);
    MultiGraph split(3, {{0, 1}});
    EXPECT_EQ(all_pairs_distances(split)(0, 2), DistanceMatrix::kUnreachable);
}

TEST(Distances, PetersenDiameterTwo) {
    auto g = fixtures::petersen();
    auto d = all_pairs_distances(g);
    auto ref = support::floyd(g);
    int diameter = 0;
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 0; v < 10; ++v) {
            EXPECT_EQ(d(u, v), ref[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            diameter = std::max(diameter, d(u, v));
        }
    EXPECT_EQ(diameter, 2);
}

TEST(Distances, MatchFloydOnCorpus) {
    for (const auto &[name, g] : support::corpus(20, 30, 20)) {
        auto d = all_pairs_distances(g);
        auto ref = support::floyd(g);
        for (std::size_t u = 0; u < g.order(); ++u)
            for (std::size_t v = 0; v < g.order(); ++v) {
                ASSERT_EQ(d(static_cast<Vertex>(u), static_cast<Vertex>(v)), ref[u][v]) << name;
                ASSERT_EQ(d(static_cast<Vertex>(u), static_cast<Vertex>(v)),
                          d(static_cast<Vertex>(v), static_cast<Vertex>(u)));
            }
    }
}

TEST(Distances, BoundedBfsStopsAtDepth) {
    MultiGraph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto d = bfs_distances(path, 0, 2);
    EXPECT_EQ(d[2], 2);
    EXPECT_EQ(d[3], DistanceMatrix::kUnreachable);
}

TEST(Components, LabelsAndSubgraphs) {
    MultiGraph g(5, {{3, 4}, {0, 1}});
    int count = 0;
    auto label = connected_components(g, &count);
    EXPECT_EQ(count, 3);
    EXPECT_EQ(label, (std::vector<int>{0, 0, 1, 2, 2}));
    EXPECT_FALSE(is_connected(g));

    std::vector<Vertex> keep{4, 3};
    auto sub = induced_subgraph(g, keep);
    EXPECT_EQ(sub.graph.order(), 2u);
    EXPECT_TRUE(sub.graph.adjacent(0, 1));
    EXPECT_EQ(sub.to_global[0], 4);
    EXPECT_EQ(sub.to_local[3], 1);
    EXPECT_EQ(sub.to_local[0], -1);
}

TEST(Relabel, PreservesStructure) {
    auto g = fixtures::petersen();
    std::vector<Vertex> perm{3, 1, 4, 0, 5, 9, 2, 6, 8, 7};
    auto h = relabel(g, perm);
    for (const auto &e : g.edges())
        EXPECT_TRUE(h.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
    EXPECT_EQ(h.size(), g.size());
}

TEST(EdgeList, RoundTrip) {
    const std::string text = "3\n0 1\n0 1\n1 2\n";
    auto g = parse_edge_list(text);
    EXPECT_EQ(g.multiplicity(0, 1), 2);
    EXPECT_EQ(emit_edge_list(g), text);
    for (const auto &[name, g2] : support::corpus(20, 20, 10))
        EXPECT_EQ(parse_edge_list(emit_edge_list(g2)), g2) << name;
}

TEST(EdgeList, CommentsAndErrors) {
    auto g = parse_edge_list("# triangle\n\n3\n0 1\n# middle\n1 2\n2 0\n");
    EXPECT_EQ(g.size(), 3u);
    try {
        parse_edge_list("3\n0 1\n1 x\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { parse_edge_list("2\n0 5\n"); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { parse_edge_list("2\n1 1\n"); }), ErrorCode::LoopEdge);
    EXPECT_EQ(code_of([] { parse_edge_list(""); }), ErrorCode::MalformedInput);
}

TEST(Graph6, KnownStrings) {
    // K4 is "C~" and the Petersen graph "IheA@GUAo" in the usual nauty encoding.
    EXPECT_EQ(emit_graph6(fixtures::k4()), "C~");
    auto p = parse_graph6("IheA@GUAo");
    EXPECT_EQ(p.order(), 10u);
    EXPECT_TRUE(is_cubic(p));
    EXPECT_TRUE(are_isomorphic(p, fixtures::petersen()));
    EXPECT_EQ(parse_graph6(">>graph6<<C~"), fixtures::k4());
}

TEST(Graph6, AgreesWithReferenceDecoder) {
    for (const auto &[name, g] : support::corpus(24, 30, 20)) {
        const auto s = emit_graph6(g);
        std::vector<VertexPair> edges;
        for (auto [a, b] : decode_small_graph6(s))
            edges.push_back({a, b});
        EXPECT_EQ(MultiGraph(g.order(), edges), g) << name;
        EXPECT_EQ(parse_graph6(s), g) << name;
    }
}

TEST(Graph6, LargeOrderUsesLongHeader) {
    auto ring = gen_ring_of_diamonds(20); // 80 vertices
    const auto s = emit_graph6(ring);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph6(s), ring);
}

TEST(Graph6, RejectsMultigraphsAndGarbage) {
    EXPECT_EQ(code_of([] { emit_graph6(MultiGraph(2, {{0, 1}, {0, 1}})); }), ErrorCode::Graph6Multiedge);
    EXPECT_EQ(code_of([] { parse_graph6("C"); }), ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { parse_graph6("C~~"); }), ErrorCode::MalformedInput);
}

TEST(Formats, Detection) {
    EXPECT_EQ(detect_format("4\n0 1\n"), GraphFormat::EdgeList);
    EXPECT_EQ(detect_format("C~\n"), GraphFormat::Graph6);
    EXPECT_EQ(parse_graph6_list("C~\n\nC~\n").size(), 2u);
}
