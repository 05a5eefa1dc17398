#ifndef CLAWCOLOR_TESTS_SUPPORT_HPP
#define CLAWCOLOR_TESTS_SUPPORT_HPP

// Brute-force reference implementations and the shared test corpus.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "clawcolor/clawcolor.hpp"

namespace support {

using namespace clawcolor;

/// Floyd-Warshall on the underlying simple graph.
inline std::vector<std::vector<int>> floyd(const MultiGraph &g) {
    const int inf = 1 << 20;
    const std::size_t n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t v = 0; v < n; ++v)
        d[v][v] = 0;
    for (const auto &e : g.edges())
        d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
            d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Coloring validity straight from the definition, via Floyd-Warshall.
inline bool valid_by_definition(const MultiGraph &g, const PackingColoring &c) {
    const auto d = floyd(g);
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            const int cu = c.class_of(static_cast<Vertex>(u));
            if (cu < 0 || cu != c.class_of(static_cast<Vertex>(v)))
                continue;
            if (d[u][v] <= c.spec().radius(cu))
                return false;
        }
    return true;
}

/// Claw check over every 4-subset.
inline bool claw_free_brute(const MultiGraph &g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex c = 0; c < n; ++c)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex d = b + 1; d < n; ++d) {
                    if (c == a || c == b || c == d)
                        continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && !g.adjacent(a, b) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d))
                        return false;
                }
    return true;
}

inline bool connected_without(const MultiGraph &g, std::size_t skip) {
    std::vector<VertexPair> rest;
    const auto inst = g.edge_instances();
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (i != skip)
            rest.push_back(inst[i]);
    return is_connected(MultiGraph(g.order(), rest));
}

/// Bridges as the edge copies whose removal disconnects the graph.
inline std::vector<VertexPair> bridges_brute(const MultiGraph &g) {
    std::vector<VertexPair> out;
    const auto inst = g.edge_instances();
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (!connected_without(g, i))
            out.push_back(inst[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Every perfect matching, as sorted lists of edge instance ids.
inline std::vector<std::vector<EdgeId>> all_perfect_matchings(const MultiGraph &g) {
    const auto inst = g.edge_instances();
    std::vector<std::vector<EdgeId>> out;
    std::vector<char> covered(g.order(), 0);
    std::vector<EdgeId> chosen;
    std::function<void()> rec = [&] {
        std::size_t v = 0;
        while (v < g.order() && covered[v])
            ++v;
        if (v == g.order()) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const auto a = static_cast<std::size_t>(inst[i].u), b = static_cast<std::size_t>(inst[i].v);
            if ((a != v && b != v) || covered[a] || covered[b])
                continue;
            covered[a] = covered[b] = 1;
            chosen.push_back(static_cast<EdgeId>(i));
            rec();
            chosen.pop_back();
            covered[a] = covered[b] = 0;
        }
    };
    rec();
    for (auto &m : out)
        std::sort(m.begin(), m.end());
    return out;
}

/// The factor's cycles use every non-matching edge exactly once and each
/// vertex exactly once; the matching is perfect.
inline bool valid_two_factor(const MultiGraph &h, const TwoFactor &f) {
    const auto inst = h.edge_instances();
    std::vector<int> uses(inst.size(), 0);
    std::vector<int> seen(h.order(), 0);
    for (const auto &c : f.cycles) {
        if (c.vertices.size() < 2 || c.vertices.size() != c.edges.size())
            return false;
        for (std::size_t j = 0; j < c.vertices.size(); ++j) {
            ++seen[static_cast<std::size_t>(c.vertices[j])];
            const auto e = inst[static_cast<std::size_t>(c.edges[j])];
            const auto a = c.vertices[j], b = c.vertices[(j + 1) % c.vertices.size()];
            if (ordered(a, b) != e)
                return false;
            ++uses[static_cast<std::size_t>(c.edges[j])];
        }
    }
    std::vector<int> matched(h.order(), 0);
    for (EdgeId e : f.matching) {
        ++uses[static_cast<std::size_t>(e)];
        ++matched[static_cast<std::size_t>(inst[static_cast<std::size_t>(e)].u)];
        ++matched[static_cast<std::size_t>(inst[static_cast<std::size_t>(e)].v)];
    }
    return std::all_of(uses.begin(), uses.end(), [](int x) { return x == 1; }) &&
           std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }) &&
           std::all_of(matched.begin(), matched.end(), [](int x) { return x == 1; });
}

/// Isomorphism by trying every permutation (small n only).
inline bool isomorphic_brute(const MultiGraph &a, const MultiGraph &b) {
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every 1a vertex has two 1b neighbours or lies on a diamond, and
/// symmetrically.
inline bool partner_neighbours_or_diamond(const MultiGraph &g, const PackingColoring &c) {
    std::vector<char> on_diamond(g.order(), 0);
    for (const auto &d : find_diamonds(g).diamonds)
        for (Vertex v : {d.a, d.b, d.c, d.d})
            on_diamond[static_cast<std::size_t>(v)] = 1;
    for (std::size_t u = 0; u < g.order(); ++u) {
        const auto cu = c.color(static_cast<Vertex>(u));
        if (is_two_class(cu) || on_diamond[u])
            continue;
        int other = 0;
        for (const auto &nb : g.neighbors(static_cast<Vertex>(u)))
            other += c.color(nb.vertex) == partner(cu);
        if (other != 2)
            return false;
    }
    return true;
}

struct CorpusGraph {
    std::string name;
    MultiGraph graph;
};

/// Deterministic mix of bridgeless built graphs, rings of diamonds and
/// bridged assemblies, all claw-free cubic with at most `max_n` vertices.
inline std::vector<CorpusGraph> corpus(std::size_t max_n, std::size_t built_target, std::size_t bridged_target) {
    std::vector<CorpusGraph> out;
    out.push_back({"K4", fixtures::k4()});
    out.push_back({"prism", fixtures::prism()});
    if (bridged_target > 0 && fixtures::fig3_g().order() <= max_n)
        out.push_back({"Fig3_G", fixtures::fig3_g()});
    for (int k = 2; 4 * static_cast<std::size_t>(k) <= max_n; ++k)
        out.push_back({"ring" + std::to_string(k), gen_ring_of_diamonds(k)});

    SplitMix64 rng(20240611);
    std::size_t built = 0;
    for (std::uint64_t seed = 1; built < built_target && seed < 100000; ++seed) {
        const int hn = 2 * (1 + static_cast<int>(rng.below(4)));
        auto h = gen_cubic_multigraph(hn, seed);
        ExpansionSpec spec{std::vector<int>(h.size(), 0), seed};
        for (auto &len : spec.string_length)
            len = rng.below(5) == 0 ? 1 + static_cast<int>(rng.below(2)) : 0;
        auto g = expand_to_clawfree(h, spec);
        if (g.order() > max_n || !g.is_simple())
            continue;
        out.push_back({"built" + std::to_string(seed), std::move(g)});
        ++built;
    }

    static const char *shapes[] = {"III:1,III:1",          "III:1,III:2,III:1", "III:1,D:2,III:1",
                                   "III:1,K3:3,III:1,III:1", "III:2,III:1,III:1", "III:1,III:3,III:1,III:1"};
    std::size_t bridged = 0;
    for (std::uint64_t seed = 1; bridged < bridged_target && seed < 200000; ++seed) {
        const char *shape = shapes[seed % std::size(shapes)];
        auto bg = gen_bridged(shape, seed);
        if (bg.graph.order() > max_n)
            continue;
        out.push_back({std::string("bridged[") + shape + "]" + std::to_string(seed), std::move(bg.graph)});
        ++bridged;
    }
    return out;
}

} // namespace support

#endif
