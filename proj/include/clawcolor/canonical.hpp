#ifndef CLAWCOLOR_CANONICAL_HPP
#define CLAWCOLOR_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "clawcolor/coloring.hpp"
#include "clawcolor/factorization.hpp"
#include "clawcolor/graph.hpp"
#include "clawcolor/oracle.hpp"
#include "clawcolor/oum.hpp"

namespace clawcolor {

namespace detail {

inline void require_valid(const MultiGraph &g, const PackingColoring &c, const char *what) {
    auto result = verify(g, c);
    if (!result.ok()) {
        const auto &v = result.violations.front();
        fail(ErrorCode::VerificationFailed, std::string(what) + ": vertices " + std::to_string(v.u) + " and " +
                                                std::to_string(v.v) + " share class " +
                                                c.label_of(v.u) + " at distance " + std::to_string(v.distance));
    }
}

} // namespace detail

inline PackingColoring color_k4(const MultiGraph &g) {
    if (!is_k4(g))
        fail(ErrorCode::NotK4, "graph is not K4");
    auto c = PackingColoring::one_one_two_two(4);
    for (Vertex v = 0; v < 4; ++v)
        c.assign(v, v);
    return c;
}

/// Interiors of every diamond get 2a/2b; the two exterior endpoints of each
/// connecting edge get 1a/1b. With `special` (a connecting edge {s, y}),
/// s gets 1a and y gets 1b.
inline PackingColoring color_ring_of_diamonds(const MultiGraph &g, std::optional<VertexPair> special = std::nullopt) {
    if (!is_ring_of_diamonds(g))
        fail(ErrorCode::NotRingOfDiamonds, "graph is not a ring of diamonds");
    const auto dec = oum_decompose(g);
    auto c = PackingColoring::one_one_two_two(g.order());
    for (const auto &d : dec.ring) {
        c.assign(d.inner1, Color::two_a);
        c.assign(d.inner2, Color::two_b);
        c.assign(d.near, Color::one_a);
        c.assign(d.far, Color::one_b);
    }
    if (special) {
        const Vertex s = special->u, y = special->v;
        bool spine = false;
        for (std::size_t i = 0; i < dec.ring.size(); ++i) {
            const Vertex far = dec.ring[i].far, near = dec.ring[(i + 1) % dec.ring.size()].near;
            if (ordered(far, near) == ordered(s, y))
                spine = true;
        }
        if (!spine)
            fail(ErrorCode::EdgeNotLiftable, "edge " + std::to_string(s) + "-" + std::to_string(y) +
                                                 " is not a connecting edge of the ring");
        c.assign(s, Color::one_a);
        c.assign(y, Color::one_b);
    }
    detail::require_valid(g, c, "ring of diamonds");
    return c;
}

/// Roles of the triangle replacing an H-vertex that lies on a 2-factor cycle:
/// `x` ends the incoming cycle edge, `y` starts the outgoing one and `h`
/// carries the matching edge.
struct TriangleRoles {
    Vertex x = -1, h = -1, y = -1;
};

namespace detail {

// The G-vertex in the triangle of H-vertex `hv` at which H-edge `e` ends.
inline Vertex edge_end_at(const OumDecomposition &dec, EdgeId e, Vertex hv) {
    const auto inst = dec.h.edge_instances()[static_cast<std::size_t>(e)];
    const auto &real = dec.realization[static_cast<std::size_t>(e)];
    return inst.u == hv ? real.gu : real.gv;
}

inline void require_built(const OumDecomposition &dec) {
    if (dec.kind != OumKind::Built)
        fail(ErrorCode::PreconditionViolated, "decomposition is " + std::string(to_string(dec.kind)) + ", not Built");
}

} // namespace detail

/// Triangle roles for every H-vertex, following each cycle in the factor's stored direction.
inline std::vector<TriangleRoles> triangle_roles(const OumDecomposition &dec, const TwoFactor &factor) {
    detail::require_built(dec);
    std::vector<TriangleRoles> roles(dec.h.order());
    for (const auto &cyc : factor.cycles) {
        const std::size_t m = cyc.vertices.size();
        for (std::size_t j = 0; j < m; ++j) {
            const Vertex hv = cyc.vertices[j];
            const EdgeId in = cyc.edges[(j + m - 1) % m], out = cyc.edges[j];
            auto &r = roles[static_cast<std::size_t>(hv)];
            r.x = detail::edge_end_at(dec, in, hv);
            r.y = detail::edge_end_at(dec, out, hv);
            for (Vertex t : dec.triangle_of[static_cast<std::size_t>(hv)])
                if (t != r.x && t != r.y)
                    r.h = t;
        }
    }
    return roles;
}

/// The coloring built from a 2-factor of H: matched ends 2a (lower H-vertex) /
/// 2b, triangle x/y corners 1a/1b, strings on cycle edges with 1a/1b
/// exteriors and 2a/2b interiors, strings on matched edges the other way round.
inline PackingColoring canonical_color(const MultiGraph &g, const OumDecomposition &dec, const TwoFactor &factor) {
    detail::require_built(dec);
    const auto instances = dec.h.edge_instances();
    auto c = PackingColoring::one_one_two_two(g.order());

    for (const auto &r : triangle_roles(dec, factor)) {
        if (r.x < 0 || r.y < 0 || r.h < 0)
            fail(ErrorCode::PreconditionViolated, "factor does not cover every H-vertex");
        c.assign(r.x, Color::one_a);
        c.assign(r.y, Color::one_b);
    }

    // Type 1: a string on a cycle edge, read along the cycle direction.
    for (const auto &cyc : factor.cycles) {
        for (std::size_t j = 0; j < cyc.edges.size(); ++j) {
            const auto &real = dec.realization[static_cast<std::size_t>(cyc.edges[j])];
            const bool forward = instances[static_cast<std::size_t>(cyc.edges[j])].u == cyc.vertices[j];
            for (const auto &raw : real.string) {
                const auto d = forward ? raw : raw.reversed();
                c.assign(d.near, Color::one_a);
                c.assign(d.far, Color::one_b);
                c.assign(d.inner1, Color::two_a);
                c.assign(d.inner2, Color::two_b);
            }
        }
    }

    // Matched edges, oriented from the lower H-vertex; Type 2 strings follow.
    for (EdgeId e : factor.matching) {
        const auto &real = dec.realization[static_cast<std::size_t>(e)];
        c.assign(real.gu, Color::two_a);
        c.assign(real.gv, Color::two_b);
        for (const auto &d : real.string) {
            c.assign(d.near, Color::two_b);
            c.assign(d.far, Color::two_a);
            c.assign(d.inner1, Color::one_a);
            c.assign(d.inner2, Color::one_b);
        }
    }

    if (!c.complete())
        fail(ErrorCode::PreconditionViolated, "decomposition does not cover every vertex");
    detail::require_valid(g, c, "canonical coloring");
    return c;
}

/// Where the H-edge of the special G-edge must go.
enum class EdgePlacement {
    OnFactor,  // special's endpoints get {1a, 1b}
    OnMatching // the H-edge is matched; a bare edge's endpoints get {2a, 2b}
};

inline PackingColoring canonical_color_with_edge(const MultiGraph &g, const OumDecomposition &dec, VertexPair special,
                                                 EdgePlacement placement = EdgePlacement::OnFactor) {
    detail::require_built(dec);
    if (special.u < 0 || special.v < 0 || static_cast<std::size_t>(special.u) >= g.order() ||
        static_cast<std::size_t>(special.v) >= g.order() || !g.adjacent(special.u, special.v))
        fail(ErrorCode::EdgeAbsent, std::to_string(special.u) + "-" + std::to_string(special.v) + " is not an edge");
    const auto e = dec.lift(special.u, special.v);
    if (!e)
        fail(ErrorCode::EdgeNotLiftable, "edge " + std::to_string(special.u) + "-" + std::to_string(special.v) +
                                             " lies inside a triangle or diamond");
    const auto factor =
        placement == EdgePlacement::OnFactor ? two_factor_through(dec.h, *e) : two_factor_avoiding(dec.h, *e);
    return canonical_color(g, dec, factor);
}

/// K4, ring of diamonds, or the canonical coloring from the first 2-factor found.
inline PackingColoring color_two_edge_connected(const MultiGraph &g) {
    const auto dec = oum_decompose(g);
    switch (dec.kind) {
    case OumKind::K4: return color_k4(g);
    case OumKind::RingOfDiamonds: return color_ring_of_diamonds(g);
    case OumKind::Built: break;
    }
    return canonical_color(g, dec, two_factor(dec.h));
}

} // namespace clawcolor

#endif
