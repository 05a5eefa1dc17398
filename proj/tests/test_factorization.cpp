#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace clawcolor;

namespace {

bool is_perfect(const MultiGraph &g, const std::vector<EdgeId> &m) {
    const auto inst = g.edge_instances();
    std::vector<int> hit(g.order(), 0);
    for (EdgeId e : m) {
        ++hit[static_cast<std::size_t>(inst[static_cast<std::size_t>(e)].u)];
        ++hit[static_cast<std::size_t>(inst[static_cast<std::size_t>(e)].v)];
    }
    return std::all_of(hit.begin(), hit.end(), [](int x) { return x == 1; });
}

// Every 2-factor as a set of edge instances; complements of all perfect matchings.
std::set<std::vector<EdgeId>> all_two_factors(const MultiGraph &g) {
    std::set<std::vector<EdgeId>> out;
    for (const auto &m : support::all_perfect_matchings(g)) {
        std::vector<EdgeId> f;
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.size()); ++e)
            if (!std::binary_search(m.begin(), m.end(), e))
                f.push_back(e);
        out.insert(f);
    }
    return out;
}

std::vector<EdgeId> factor_edges(const TwoFactor &f) {
    std::vector<EdgeId> out;
    for (const auto &c : f.cycles)
        out.insert(out.end(), c.edges.begin(), c.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(PerfectMatching, SmallCases) {
    auto k4 = perfect_matching(fixtures::k4());
    ASSERT_TRUE(k4);
    EXPECT_EQ(k4->edges.size(), 2u);
    EXPECT_TRUE(is_perfect(fixtures::k4(), k4->edges));
    EXPECT_EQ(support::all_perfect_matchings(fixtures::k4()).size(), 3u);

    MultiGraph triple(2, {{0, 1}, {0, 1}, {0, 1}});
    auto t = perfect_matching(triple);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->edges, (std::vector<EdgeId>{0}));

    MultiGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_FALSE(perfect_matching(c5).has_value());
}

TEST(PerfectMatching, ExistenceAgreesWithEnumeration) {
    SplitMix64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(2 + rng.below(9));
        std::vector<VertexPair> edges;
        for (Vertex a = 0; a < static_cast<Vertex>(n); ++a)
            for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b)
                if (rng.below(100) < 30)
                    edges.push_back({a, b});
        MultiGraph g(n, edges);
        auto m = perfect_matching(g);
        const bool exists = !support::all_perfect_matchings(g).empty();
        ASSERT_EQ(m.has_value(), exists) << emit_edge_list(g);
        if (m) {
            EXPECT_TRUE(is_perfect(g, m->edges));
        }
    }
}

TEST(PerfectMatching, CorpusUpToTen) {
    for (const auto &[name, g] : support::corpus(10, 20, 0)) {
        auto m = perfect_matching(g);
        ASSERT_TRUE(m) << name;
        auto all = support::all_perfect_matchings(g);
        EXPECT_NE(std::find(all.begin(), all.end(), m->edges), all.end()) << name;
    }
}

TEST(TwoFactor, K4IsAFourCycle) {
    auto f = two_factor(fixtures::k4());
    ASSERT_EQ(f.cycles.size(), 1u);
    EXPECT_EQ(f.cycles[0].vertices.size(), 4u);
    EXPECT_TRUE(support::valid_two_factor(fixtures::k4(), f));
}

TEST(TwoFactor, FigureOneFactorExists) {
    const auto h = fixtures::fig1_h();
    EXPECT_TRUE(is_two_edge_connected(h));
    // The figure's matching is perfect and its complement is C4 + digon + C4.
    const auto inst = h.edge_instances();
    std::vector<EdgeId> m;
    for (auto p : fixtures::fig1_matching())
        m.push_back(static_cast<EdgeId>(std::find(inst.begin(), inst.end(), ordered(p.u, p.v)) - inst.begin()));
    std::sort(m.begin(), m.end());
    ASSERT_TRUE(is_perfect(h, m));
    auto all = support::all_perfect_matchings(h);
    EXPECT_NE(std::find(all.begin(), all.end(), m), all.end());
    auto f = two_factor_from_matching(h, m);
    EXPECT_TRUE(support::valid_two_factor(h, f));
    std::multiset<std::size_t> lengths;
    for (const auto &c : f.cycles)
        lengths.insert(c.vertices.size());
    EXPECT_EQ(lengths, (std::multiset<std::size_t>{2, 4, 4}));

    auto computed = two_factor(h);
    EXPECT_TRUE(support::valid_two_factor(h, computed));
}

TEST(TwoFactor, Petersen) {
    auto f = two_factor(fixtures::petersen());
    EXPECT_TRUE(support::valid_two_factor(fixtures::petersen(), f));
    std::size_t covered = 0;
    for (const auto &c : f.cycles) {
        covered += c.vertices.size();
        EXPECT_EQ(c.vertices.size(), 5u); // Petersen is not Hamiltonian
    }
    EXPECT_EQ(covered, 10u);
}

TEST(TwoFactor, Errors) {
    auto bridged = fixtures::fig3_g();
    try {
        two_factor(bridged);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotBridgeless);
    }
    EXPECT_THROW(two_factor(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), Error);
}

TEST(TwoFactorThrough, SmallCases) {
    auto k4 = fixtures::k4();
    auto f = two_factor_through(k4, 0);
    EXPECT_TRUE(f.contains(0));
    EXPECT_TRUE(support::valid_two_factor(k4, f));
    ASSERT_EQ(f.cycles.size(), 1u);
    EXPECT_EQ(f.cycles[0].vertices.size(), 4u);

    MultiGraph triple(2, {{0, 1}, {0, 1}, {0, 1}});
    for (EdgeId e = 0; e < 3; ++e) {
        auto t = two_factor_through(triple, e);
        EXPECT_TRUE(t.contains(e));
        ASSERT_EQ(t.cycles.size(), 1u);
        EXPECT_EQ(t.cycles[0].vertices.size(), 2u);
    }
    try {
        two_factor_through(k4, 6);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EdgeAbsent);
    }
    try {
        two_factor_through(MultiGraph(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}, {0, 3}}), 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCubic);
    }
}

TEST(TwoFactorThrough, FigureTwoMultigraphAgainstEnumeration) {
    const auto h = fixtures::fig2_h();
    const auto factors = all_two_factors(h);
    const auto inst = h.edge_instances();
    const auto e = static_cast<EdgeId>(std::find(inst.begin(), inst.end(), VertexPair{0, 1}) - inst.begin());
    auto f = two_factor_through(h, e);
    EXPECT_TRUE(f.contains(e));
    EXPECT_TRUE(factors.count(factor_edges(f)));
}

TEST(TwoFactorThrough, EveryEdgeOfRandomMultigraphs) {
    SplitMix64 rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 * (1 + static_cast<int>(rng.below(4)));
        auto h = gen_cubic_multigraph(n, rng.next());
        const auto factors = all_two_factors(h);
        for (EdgeId e = 0; e < static_cast<EdgeId>(h.size()); ++e) {
            auto f = two_factor_through(h, e);
            ASSERT_TRUE(f.contains(e));
            ASSERT_TRUE(support::valid_two_factor(h, f));
            ASSERT_TRUE(factors.count(factor_edges(f)));

            auto g = two_factor_avoiding(h, e);
            ASSERT_FALSE(g.contains(e));
            ASSERT_TRUE(std::binary_search(g.matching.begin(), g.matching.end(), e));
            ASSERT_TRUE(support::valid_two_factor(h, g));
        }
    }
}
