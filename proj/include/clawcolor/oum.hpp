#ifndef CLAWCOLOR_OUM_HPP
#define CLAWCOLOR_OUM_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawcolor/graph.hpp"
#include "clawcolor/recognition.hpp"

namespace clawcolor {

/// Induced diamond: interiors b < c adjacent to everything, exteriors a < d.
struct Diamond {
    Vertex a, b, c, d;
};

struct DiamondScan {
    std::vector<Diamond> diamonds;
    /// The input is K4; `diamonds` then lists its six (non-induced) K4-minus-an-edge copies.
    bool is_k4 = false;
};

inline bool is_k4(const MultiGraph &g) {
    if (g.order() != 4 || g.size() != 6 || !g.is_simple())
        return false;
    return is_cubic(g);
}

inline DiamondScan find_diamonds(const MultiGraph &g) {
    DiamondScan scan;
    if (is_k4(g)) {
        scan.is_k4 = true;
        for (Vertex a = 0; a < 4; ++a)
            for (Vertex d = a + 1; d < 4; ++d) {
                std::array<Vertex, 2> inner{};
                int k = 0;
                for (Vertex x = 0; x < 4; ++x)
                    if (x != a && x != d)
                        inner[static_cast<std::size_t>(k++)] = x;
                scan.diamonds.push_back({a, inner[0], inner[1], d});
            }
        return scan;
    }
    for (const auto &e : g.edges()) {
        const Vertex b = e.u, c = e.v;
        std::vector<Vertex> common;
        for (const auto &nb : g.neighbors(b))
            if (nb.vertex != c && g.adjacent(nb.vertex, c))
                common.push_back(nb.vertex);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (is_induced_diamond(g, common[i], b, c, common[j]))
                    scan.diamonds.push_back({common[i], b, c, common[j]});
    }
    return scan;
}

inline bool is_ring_of_diamonds(const MultiGraph &g) {
    if (g.order() == 0 || is_k4(g) || !g.is_simple() || !is_connected(g) || !is_cubic(g) || !is_claw_free(g))
        return false;
    std::vector<char> covered(g.order(), 0);
    for (const auto &d : find_diamonds(g).diamonds)
        for (Vertex v : {d.a, d.b, d.c, d.d})
            covered[static_cast<std::size_t>(v)] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// A diamond inside a string, oriented along the string: `near` is the
/// exterior vertex met first, `far` the exterior met last.
struct DiamondRoles {
    Vertex near, inner1, inner2, far;

    DiamondRoles reversed() const { return {far, inner1, inner2, near}; }
};

/// How one edge of H is realised in G: `gu` lies in the triangle of the
/// lower endpoint of the H-edge, `gv` in the other. The string (possibly
/// empty) runs from gu to gv.
struct HEdgeRealization {
    Vertex gu = -1;
    Vertex gv = -1;
    std::vector<DiamondRoles> string;
};

enum class OumKind { K4, RingOfDiamonds, Built };

constexpr std::string_view to_string(OumKind kind) noexcept {
    switch (kind) {
    case OumKind::K4: return "K4";
    case OumKind::RingOfDiamonds: return "RingOfDiamonds";
    case OumKind::Built: return "Built";
    }
    return "?";
}

struct OumDecomposition {
    OumKind kind = OumKind::Built;
    /// RingOfDiamonds: diamonds in cyclic order, ring[i].far adjacent to ring[i+1].near.
    std::vector<DiamondRoles> ring;

    // Built only.
    MultiGraph h;
    std::vector<std::array<Vertex, 3>> triangle_of; // H-vertex -> its triangle in G, sorted
    std::vector<HEdgeRealization> realization;      // indexed by H EdgeId
    std::map<VertexPair, EdgeId> h_edge_of;         // G-edges outside triangles and diamonds

    std::optional<EdgeId> lift(Vertex a, Vertex b) const {
        auto it = h_edge_of.find(ordered(a, b));
        if (it == h_edge_of.end())
            return std::nullopt;
        return it->second;
    }
};

namespace detail {

// The exterior vertex `x` of diamond `dm`: its unique neighbour outside the diamond.
inline Vertex outside_neighbor(const MultiGraph &g, const Diamond &dm, Vertex x) {
    for (const auto &nb : g.neighbors(x))
        if (nb.vertex != dm.a && nb.vertex != dm.b && nb.vertex != dm.c && nb.vertex != dm.d)
            return nb.vertex;
    fail(ErrorCode::StructureViolation, "diamond exterior " + std::to_string(x) + " has no outside neighbour");
}

} // namespace detail

/// Decomposes a 2-edge-connected claw-free cubic graph into K4, a ring of
/// diamonds, or the multigraph H it is built from (every H-vertex a
/// triangle, some H-edges a string of diamonds).
inline OumDecomposition oum_decompose(const MultiGraph &g) {
    detail::require_claw_free_cubic(g);
    if (!bridge_pairs(g).empty())
        fail(ErrorCode::NotTwoEdgeConnected, "graph has a bridge");

    OumDecomposition dec;
    if (is_k4(g)) {
        dec.kind = OumKind::K4;
        return dec;
    }

    const std::size_t n = g.order();
    const auto diamonds = find_diamonds(g).diamonds;
    std::vector<int> diamond_of(n, -1);
    for (std::size_t i = 0; i < diamonds.size(); ++i)
        for (Vertex v : {diamonds[i].a, diamonds[i].b, diamonds[i].c, diamonds[i].d}) {
            if (diamond_of[static_cast<std::size_t>(v)] != -1)
                fail(ErrorCode::StructureViolation, "vertex " + std::to_string(v) + " lies on two diamonds");
            diamond_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }

    // Maximal strings: start at a diamond with an exterior whose outside
    // neighbour is not on a diamond, and extend while the next one is.
    std::vector<char> used(diamonds.size(), 0);
    struct RawString {
        Vertex start, end;
        std::vector<DiamondRoles> chain;
    };
    std::vector<RawString> strings;
    for (std::size_t i = 0; i < diamonds.size(); ++i) {
        if (used[i])
            continue;
        const auto &dm = diamonds[i];
        Vertex entry = -1;
        for (Vertex ext : {dm.a, dm.d}) {
            Vertex out = detail::outside_neighbor(g, dm, ext);
            if (diamond_of[static_cast<std::size_t>(out)] == -1) {
                entry = ext;
                break;
            }
        }
        if (entry == -1)
            continue; // interior of a string or part of a ring; reached from an end
        RawString s;
        s.start = detail::outside_neighbor(g, dm, entry);
        int cur = static_cast<int>(i);
        Vertex near = entry;
        while (true) {
            const auto &d = diamonds[static_cast<std::size_t>(cur)];
            used[static_cast<std::size_t>(cur)] = 1;
            Vertex far = (near == d.a) ? d.d : d.a;
            s.chain.push_back({near, d.b, d.c, far});
            Vertex out = detail::outside_neighbor(g, d, far);
            int next = diamond_of[static_cast<std::size_t>(out)];
            if (next == -1) {
                s.end = out;
                break;
            }
            if (used[static_cast<std::size_t>(next)])
                fail(ErrorCode::StructureViolation, "diamond string revisits a diamond");
            cur = next;
            near = out;
        }
        strings.push_back(std::move(s));
    }

    const bool all_diamond =
        std::all_of(diamond_of.begin(), diamond_of.end(), [](int d) { return d != -1; });
    if (all_diamond) {
        dec.kind = OumKind::RingOfDiamonds;
        int cur = 0;
        Vertex near = diamonds[0].a;
        for (std::size_t k = 0; k < diamonds.size(); ++k) {
            const auto &d = diamonds[static_cast<std::size_t>(cur)];
            Vertex far = (near == d.a) ? d.d : d.a;
            dec.ring.push_back({near, d.b, d.c, far});
            Vertex out = detail::outside_neighbor(g, d, far);
            cur = diamond_of[static_cast<std::size_t>(out)];
            near = out;
        }
        if (cur != 0 || near != diamonds[0].a)
            fail(ErrorCode::StructureViolation, "diamonds do not close into a single ring");
        return dec;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end())
        fail(ErrorCode::StructureViolation, "cyclic chain of diamonds inside a larger graph");

    // Every remaining vertex lies on exactly one triangle.
    std::vector<int> triangle_id(n, -1);
    std::vector<std::array<Vertex, 3>> triangles;
    for (std::size_t v = 0; v < n; ++v) {
        if (diamond_of[v] != -1 || triangle_id[v] != -1)
            continue;
        auto nbs = g.neighbors(static_cast<Vertex>(v));
        std::vector<std::array<Vertex, 3>> found;
        for (std::size_t i = 0; i < nbs.size(); ++i)
            for (std::size_t j = i + 1; j < nbs.size(); ++j)
                if (g.adjacent(nbs[i].vertex, nbs[j].vertex))
                    found.push_back({static_cast<Vertex>(v), nbs[i].vertex, nbs[j].vertex});
        if (found.size() != 1)
            fail(ErrorCode::StructureViolation, "vertex " + std::to_string(v) + " lies on " +
                                                    std::to_string(found.size()) + " triangles");
        auto tri = found[0];
        std::sort(tri.begin(), tri.end());
        for (Vertex x : tri) {
            if (diamond_of[static_cast<std::size_t>(x)] != -1 || triangle_id[static_cast<std::size_t>(x)] != -1)
                fail(ErrorCode::StructureViolation, "triangles overlap at vertex " + std::to_string(x));
            triangle_id[static_cast<std::size_t>(x)] = static_cast<int>(triangles.size());
        }
        triangles.push_back(tri);
    }
    // Scanning v ascending already numbers triangles by smallest vertex.
    dec.triangle_of = triangles;

    struct Record {
        int hu, hv;
        HEdgeRealization real;
    };
    std::vector<Record> records;
    auto add_record = [&](Vertex a, Vertex b, std::vector<DiamondRoles> chain) {
        int ta = triangle_id[static_cast<std::size_t>(a)];
        int tb = triangle_id[static_cast<std::size_t>(b)];
        if (ta < 0 || tb < 0)
            fail(ErrorCode::StructureViolation, "H-edge endpoint is not a triangle vertex");
        if (ta == tb)
            fail(ErrorCode::StructureViolation, "H-edge would be a loop at triangle " + std::to_string(ta));
        if (ta > tb) {
            std::swap(ta, tb);
            std::swap(a, b);
            std::reverse(chain.begin(), chain.end());
            for (auto &d : chain)
                d = d.reversed();
        }
        records.push_back({ta, tb, {a, b, std::move(chain)}});
    };
    for (const auto &e : g.edges()) {
        int ta = triangle_id[static_cast<std::size_t>(e.u)];
        int tb = triangle_id[static_cast<std::size_t>(e.v)];
        if (ta >= 0 && tb >= 0 && ta != tb)
            add_record(e.u, e.v, {});
    }
    for (auto &s : strings)
        add_record(s.start, s.end, s.chain);
    std::stable_sort(records.begin(), records.end(), [](const Record &x, const Record &y) {
        return std::pair(x.hu, x.hv) < std::pair(y.hu, y.hv);
    });

    std::vector<VertexPair> h_edges;
    for (const auto &r : records) {
        h_edges.push_back({r.hu, r.hv});
        dec.realization.push_back(r.real);
    }
    dec.h = MultiGraph(triangles.size(), h_edges);
    for (std::size_t id = 0; id < dec.realization.size(); ++id) {
        const auto &real = dec.realization[id];
        const auto eid = static_cast<EdgeId>(id);
        Vertex prev = real.gu;
        for (const auto &d : real.string) {
            dec.h_edge_of[ordered(prev, d.near)] = eid;
            prev = d.far;
        }
        dec.h_edge_of[ordered(prev, real.gv)] = eid;
    }
    if (!is_cubic(dec.h))
        fail(ErrorCode::StructureViolation, "reconstructed H is not cubic");
    return dec;
}

} // namespace clawcolor

#endif
