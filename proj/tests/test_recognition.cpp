#include <gtest/gtest.h>

#include "support.hpp"

using namespace clawcolor;

TEST(ClawFree, SmallCases) {
    EXPECT_TRUE(is_claw_free(fixtures::k4()));
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto w = find_claw(star);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->center, 0);
    std::vector<Vertex> leaves(w->leaves.begin(), w->leaves.end());
    std::sort(leaves.begin(), leaves.end());
    EXPECT_EQ(leaves, (std::vector<Vertex>{1, 2, 3}));
}

TEST(ClawFree, PetersenEveryVertexIsACentre) {
    auto g = fixtures::petersen();
    EXPECT_FALSE(is_claw_free(g));
    EXPECT_FALSE(support::claw_free_brute(g));
    // Girth 5: no neighbourhood has an edge, so every vertex centres a claw.
    for (Vertex v = 0; v < 10; ++v) {
        std::vector<Vertex> nb;
        for (const auto &x : g.neighbors(v))
            nb.push_back(x.vertex);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                EXPECT_FALSE(g.adjacent(nb[i], nb[j]));
    }
}

TEST(ClawFree, AgreesWithBruteForce) {
    for (const auto &[name, g] : support::corpus(20, 30, 20))
        EXPECT_EQ(is_claw_free(g), support::claw_free_brute(g)) << name;
    SplitMix64 rng(7);
    for (int t = 0; t < 40; ++t) {
        // random cubic multigraphs are typically not claw-free
        auto h = gen_cubic_multigraph(8, rng.next());
        if (h.is_simple()) {
            EXPECT_EQ(is_claw_free(h), support::claw_free_brute(h));
        }
    }
}

TEST(Bridges, SmallCases) {
    MultiGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    EXPECT_EQ(find_bridges(two_triangles), (std::vector<VertexPair>{{2, 3}}));
    EXPECT_TRUE(find_bridges(fixtures::k4()).empty());
    MultiGraph doubled(3, {{0, 1}, {0, 1}, {1, 2}});
    EXPECT_EQ(find_bridges(doubled), (std::vector<VertexPair>{{1, 2}}));
    EXPECT_THROW(find_bridges(MultiGraph(3, {{0, 1}})), Error);
}

TEST(Bridges, FigureThreeHasThree) {
    auto b = find_bridges(fixtures::fig3_g());
    EXPECT_EQ(b.size(), 3u);
    EXPECT_EQ(b, support::bridges_brute(fixtures::fig3_g()));
}

TEST(Bridges, AgreeWithRemovalOracle) {
    for (const auto &[name, g] : support::corpus(20, 40, 60)) {
        auto b = find_bridges(g);
        std::sort(b.begin(), b.end());
        EXPECT_EQ(b, support::bridges_brute(g)) << name;
    }
}

TEST(BridgeTree, BridgelessIsOneNode) {
    auto t = build_bridge_tree(fixtures::prism());
    EXPECT_EQ(t.components.size(), 1u);
    EXPECT_TRUE(t.bridges.empty());
    EXPECT_EQ(t.components[0].kind, ComponentKind::TypeIII);
}

TEST(BridgeTree, FigureThreeIsAStar) {
    auto t = build_bridge_tree(fixtures::fig3_g());
    ASSERT_EQ(t.components.size(), 4u);
    int centre = -1;
    for (std::size_t i = 0; i < 4; ++i)
        if (t.components[i].kind == ComponentKind::Triangle)
            centre = static_cast<int>(i);
    ASSERT_GE(centre, 0);
    EXPECT_EQ(t.components[static_cast<std::size_t>(centre)].vertices, (std::vector<Vertex>{0, 1, 2}));
    auto tree = t.tree();
    EXPECT_EQ(tree.degree(centre), 3);
    for (std::size_t i = 0; i < 4; ++i)
        if (static_cast<int>(i) != centre) {
            EXPECT_EQ(t.components[i].kind, ComponentKind::TypeIII);
            EXPECT_EQ(t.components[i].vertices.size(), 7u);
        }
    // the root is a leaf of a diametral path
    EXPECT_NE(t.root, centre);
    EXPECT_EQ(t.components[static_cast<std::size_t>(t.root)].parent, -1);
}

TEST(BridgeTree, TwoBlocksGiveK2) {
    auto bg = gen_bridged("III:1,III:1", 3);
    auto t = build_bridge_tree(bg.graph);
    EXPECT_EQ(t.components.size(), 2u);
    EXPECT_EQ(t.bridges, find_bridges(bg.graph));
    EXPECT_EQ(t.tree().size(), 1u);
}

TEST(BridgeTree, StructuralInvariants) {
    for (const auto &[name, g] : support::corpus(24, 0, 150)) {
        auto t = build_bridge_tree(g);
        ASSERT_EQ(t.components.size(), t.bridges.size() + 1) << name;
        ASSERT_TRUE(is_connected(t.tree())) << name;

        // Root is an end of a longest path of the tree.
        auto tree = t.tree();
        auto from_root = bfs_distances(tree, t.root);
        int ecc = *std::max_element(from_root.begin(), from_root.end());
        int diameter = 0;
        for (std::size_t v = 0; v < tree.order(); ++v) {
            auto d = bfs_distances(tree, static_cast<Vertex>(v));
            diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
        }
        EXPECT_EQ(ecc, diameter) << name;

        for (std::size_t i = 0; i < t.components.size(); ++i) {
            const auto &c = t.components[i];
            const auto size = c.vertices.size();
            // Components of a claw-free cubic graph minus its bridges.
            if (c.kind == ComponentKind::Triangle) {
                EXPECT_EQ(size, 3u) << name;
            } else if (c.kind == ComponentKind::Diamond) {
                EXPECT_EQ(size, 4u) << name;
            } else if (!c.attachments.empty()) {
                EXPECT_GE(size, 5u) << name;
            }
            if (static_cast<int>(i) == t.root)
                continue;
            // The entry's two in-component neighbours are adjacent.
            std::vector<Vertex> inside;
            for (const auto &nb : g.neighbors(c.entry))
                if (nb.vertex != c.up_neighbor)
                    inside.push_back(nb.vertex);
            ASSERT_EQ(inside.size(), 2u) << name;
            EXPECT_TRUE(g.adjacent(inside[0], inside[1])) << name;
            EXPECT_EQ(t.components[static_cast<std::size_t>(c.parent)].depth + 1, c.depth) << name;
        }
    }
}

TEST(BridgeTree, RejectsBadInput) {
    EXPECT_THROW(build_bridge_tree(fixtures::petersen()), Error);
    EXPECT_THROW(build_bridge_tree(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), Error);
}

TEST(Diamonds, SmallCases) {
    MultiGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto scan = find_diamonds(diamond);
    ASSERT_EQ(scan.diamonds.size(), 1u);
    EXPECT_EQ(scan.diamonds[0].b, 1);
    EXPECT_EQ(scan.diamonds[0].c, 2);
    EXPECT_FALSE(scan.is_k4);

    auto k4 = find_diamonds(fixtures::k4());
    EXPECT_TRUE(k4.is_k4);
    EXPECT_EQ(k4.diamonds.size(), 6u);
}

TEST(Diamonds, RingOfThreeHasThreeDisjoint) {
    auto g = gen_ring_of_diamonds(3);
    auto scan = find_diamonds(g);
    ASSERT_EQ(scan.diamonds.size(), 3u);
    std::vector<int> seen(g.order(), 0);
    for (const auto &d : scan.diamonds)
        for (Vertex v : {d.a, d.b, d.c, d.d})
            ++seen[static_cast<std::size_t>(v)];
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));

    // independent check: 4-subsets inducing exactly five edges
    int count = 0;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) +
                            g.adjacent(b, d) + g.adjacent(c, d);
                    count += e == 5;
                }
    EXPECT_EQ(count, 3);
}

TEST(Ring, Recognition) {
    EXPECT_TRUE(is_ring_of_diamonds(gen_ring_of_diamonds(2)));
    EXPECT_TRUE(is_ring_of_diamonds(gen_ring_of_diamonds(7)));
    EXPECT_FALSE(is_ring_of_diamonds(fixtures::k4()));
    EXPECT_FALSE(is_ring_of_diamonds(fixtures::fig2_g()));
    EXPECT_FALSE(is_ring_of_diamonds(fixtures::prism()));
}

TEST(Oum, Variants) {
    EXPECT_EQ(oum_decompose(fixtures::k4()).kind, OumKind::K4);
    auto ring = oum_decompose(gen_ring_of_diamonds(4));
    EXPECT_EQ(ring.kind, OumKind::RingOfDiamonds);
    ASSERT_EQ(ring.ring.size(), 4u);
    auto g = gen_ring_of_diamonds(4);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_TRUE(g.adjacent(ring.ring[i].far, ring.ring[(i + 1) % 4].near));
    EXPECT_THROW(oum_decompose(fixtures::fig3_g()), Error);
}

TEST(Oum, FigureTwo) {
    auto dec = oum_decompose(fixtures::fig2_g());
    ASSERT_EQ(dec.kind, OumKind::Built);
    EXPECT_EQ(dec.h.order(), 6u);
    EXPECT_TRUE(are_isomorphic(dec.h, fixtures::fig2_h()));
    EXPECT_TRUE(support::isomorphic_brute(dec.h, fixtures::fig2_h()));
    std::vector<std::size_t> lengths;
    for (const auto &r : dec.realization)
        if (!r.string.empty())
            lengths.push_back(r.string.size());
    EXPECT_EQ(lengths, (std::vector<std::size_t>{2, 2}));
}

TEST(Oum, RealizationIsConsistent) {
    for (const auto &[name, g] : support::corpus(30, 60, 0)) {
        auto dec = oum_decompose(g);
        if (dec.kind != OumKind::Built)
            continue;
        std::vector<int> covered(g.order(), 0);
        for (const auto &tri : dec.triangle_of) {
            for (Vertex v : tri)
                ++covered[static_cast<std::size_t>(v)];
            EXPECT_TRUE(g.adjacent(tri[0], tri[1]) && g.adjacent(tri[1], tri[2]) && g.adjacent(tri[0], tri[2]));
        }
        const auto inst = dec.h.edge_instances();
        for (std::size_t id = 0; id < inst.size(); ++id) {
            const auto &r = dec.realization[id];
            const auto &tu = dec.triangle_of[static_cast<std::size_t>(inst[id].u)];
            const auto &tv = dec.triangle_of[static_cast<std::size_t>(inst[id].v)];
            EXPECT_NE(std::find(tu.begin(), tu.end(), r.gu), tu.end()) << name;
            EXPECT_NE(std::find(tv.begin(), tv.end(), r.gv), tv.end()) << name;
            Vertex prev = r.gu;
            for (const auto &d : r.string) {
                EXPECT_TRUE(g.adjacent(prev, d.near)) << name;
                EXPECT_TRUE(is_induced_diamond(g, d.near, d.inner1, d.inner2, d.far)) << name;
                for (Vertex v : {d.near, d.inner1, d.inner2, d.far})
                    ++covered[static_cast<std::size_t>(v)];
                prev = d.far;
            }
            EXPECT_TRUE(g.adjacent(prev, r.gv)) << name;
        }
        EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](int x) { return x == 1; })) << name;
    }
}

TEST(Oum, RoundTripThroughExpansion) {
    SplitMix64 rng(99);
    for (int t = 0; t < 60; ++t) {
        const int hn = 2 * (1 + static_cast<int>(rng.below(6)));
        auto h = gen_cubic_multigraph(hn, rng.next());
        ExpansionSpec spec{std::vector<int>(h.size(), 0), rng.next()};
        for (auto &len : spec.string_length)
            len = static_cast<int>(rng.below(3));
        auto g = expand_to_clawfree(h, spec);
        auto dec = oum_decompose(g);
        ASSERT_EQ(dec.kind, OumKind::Built);
        EXPECT_TRUE(are_isomorphic(dec.h, h));
        if (hn <= 6) {
            EXPECT_TRUE(support::isomorphic_brute(dec.h, h));
        }
    }
}

TEST(Oum, Errors) {
    try {
        oum_decompose(fixtures::fig3_g());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTwoEdgeConnected);
    }
    try {
        oum_decompose(fixtures::petersen());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotClawFree);
    }
}
