#ifndef CLAWCOLOR_BRIDGE_COLORER_HPP
#define CLAWCOLOR_BRIDGE_COLORER_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clawcolor/canonical.hpp"
#include "clawcolor/coloring.hpp"
#include "clawcolor/graph.hpp"
#include "clawcolor/oracle.hpp"
#include "clawcolor/oum.hpp"
#include "clawcolor/recognition.hpp"

namespace clawcolor {

enum class TildeShape { None, K4, RingOfDiamonds, Built };

constexpr std::string_view to_string(TildeShape s) noexcept {
    switch (s) {
    case TildeShape::None: return "none";
    case TildeShape::K4: return "K4";
    case TildeShape::RingOfDiamonds: return "RingOfDiamonds";
    case TildeShape::Built: return "Built";
    }
    return "?";
}

/// The cubic graph G~ made from a Type III component G_i (local ids). For an
/// odd number of degree-2 vertices the entry x1 and its neighbours u, w are
/// cut out and s-y joined; either way the remaining degree-2 vertices are
/// paired up by new edges.
struct TildeConstruction {
    MultiGraph source;
    std::vector<Vertex> degree_two; // X: entry first, rest ascending
    bool odd = false;
    Vertex x1 = -1, u = -1, w = -1, s = -1, y = -1; // u, w, s, y only when odd
    std::vector<VertexPair> added;                  // in source ids
    MultiGraph tilde;
    std::vector<Vertex> to_tilde;  // source -> tilde, -1 for removed vertices
    std::vector<Vertex> to_source; // tilde -> source
    TildeShape shape = TildeShape::None;

    std::size_t r() const noexcept { return degree_two.size(); }
};

namespace detail {

[[noreturn]] inline void precondition(const std::string &what) { fail(ErrorCode::PreconditionViolated, what); }

inline std::vector<Vertex> neighbor_list(const MultiGraph &g, Vertex v) {
    std::vector<Vertex> out;
    for (const auto &nb : g.neighbors(v))
        out.push_back(nb.vertex);
    return out;
}

inline TildeShape classify_tilde(const MultiGraph &t) {
    if (is_k4(t))
        return TildeShape::K4;
    if (is_ring_of_diamonds(t))
        return TildeShape::RingOfDiamonds;
    return TildeShape::Built;
}

} // namespace detail

inline TildeConstruction build_tilde(const MultiGraph &gi, Vertex x1) {
    TildeConstruction tc;
    tc.source = gi;
    tc.x1 = x1;
    const std::size_t n = gi.order();
    if (x1 < 0 || static_cast<std::size_t>(x1) >= n || gi.degree(x1) != 2)
        detail::precondition("entry vertex " + std::to_string(x1) + " is not a degree-2 vertex of the component");
    tc.degree_two.push_back(x1);
    for (std::size_t v = 0; v < n; ++v) {
        const int d = gi.degree(static_cast<Vertex>(v));
        if (d != 2 && d != 3)
            detail::precondition("vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        if (d == 2 && static_cast<Vertex>(v) != x1)
            tc.degree_two.push_back(static_cast<Vertex>(v));
    }
    const auto &X = tc.degree_two;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            if (gi.adjacent(X[i], X[j]))
                detail::precondition("degree-2 vertices " + std::to_string(X[i]) + " and " + std::to_string(X[j]) +
                                     " are adjacent");
    tc.odd = X.size() % 2 == 1;

    std::vector<char> removed(n, 0);
    std::size_t first_pair = 0;
    if (tc.odd) {
        auto nb = detail::neighbor_list(gi, x1);
        tc.u = std::min(nb[0], nb[1]);
        tc.w = std::max(nb[0], nb[1]);
        if (!gi.adjacent(tc.u, tc.w))
            detail::precondition("neighbours " + std::to_string(tc.u) + ", " + std::to_string(tc.w) + " of " +
                                 std::to_string(x1) + " are not adjacent");
        for (Vertex z : detail::neighbor_list(gi, tc.u))
            if (z != x1 && z != tc.w)
                tc.s = z;
        for (Vertex z : detail::neighbor_list(gi, tc.w))
            if (z != x1 && z != tc.u)
                tc.y = z;
        if (tc.s < 0 || tc.y < 0 || tc.s == tc.y)
            detail::precondition("s and y coincide or are missing");
        if (gi.adjacent(tc.s, tc.y))
            detail::precondition("s=" + std::to_string(tc.s) + " and y=" + std::to_string(tc.y) + " are adjacent");
        for (Vertex z : {x1, tc.u, tc.w})
            removed[static_cast<std::size_t>(z)] = 1;
        tc.added.push_back(ordered(tc.s, tc.y));
        first_pair = 1;
    }
    for (std::size_t j = first_pair; j + 1 < X.size(); j += 2)
        tc.added.push_back(ordered(X[j], X[j + 1]));

    tc.to_tilde.assign(n, -1);
    for (std::size_t v = 0; v < n; ++v)
        if (!removed[v]) {
            tc.to_tilde[v] = static_cast<Vertex>(tc.to_source.size());
            tc.to_source.push_back(static_cast<Vertex>(v));
        }
    std::vector<VertexPair> edges;
    for (const auto &[a, b] : gi.edge_instances())
        if (!removed[static_cast<std::size_t>(a)] && !removed[static_cast<std::size_t>(b)])
            edges.push_back({tc.to_tilde[static_cast<std::size_t>(a)], tc.to_tilde[static_cast<std::size_t>(b)]});
    for (const auto &[a, b] : tc.added)
        edges.push_back({tc.to_tilde[static_cast<std::size_t>(a)], tc.to_tilde[static_cast<std::size_t>(b)]});
    tc.tilde = MultiGraph(tc.to_source.size(), edges);
    if (!is_cubic(tc.tilde) || !tc.tilde.is_simple())
        detail::precondition("constructed graph is not simple cubic");
    tc.shape = detail::classify_tilde(tc.tilde);
    return tc;
}

namespace detail {

// Colors G_i from a coloring of G~ so that x1 gets 2a. `root` selects the
// 1a/1b convention of the root's K4 case.
inline PackingColoring color_from_tilde(const TildeConstruction &tc, bool root) {
    auto lift = [&](const PackingColoring &tcol) {
        auto c = PackingColoring::one_one_two_two(tc.source.order());
        for (std::size_t t = 0; t < tc.to_source.size(); ++t)
            c.assign(tc.to_source[t], tcol.class_of(static_cast<Vertex>(t)));
        return c;
    };
    auto T = [&](Vertex v) { return tc.to_tilde[static_cast<std::size_t>(v)]; };

    if (!tc.odd) {
        const Vertex x1 = tc.x1, x2 = tc.degree_two[1];
        if (tc.shape != TildeShape::Built)
            fail(ErrorCode::InternalInvariant,
                 "even case produced " + std::string(to_string(tc.shape)) + " instead of a built graph");
        const auto dec = oum_decompose(tc.tilde);
        auto tcol = canonical_color_with_edge(tc.tilde, dec, ordered(T(x1), T(x2)), EdgePlacement::OnMatching);
        if (!is_two_class(tcol.color(T(x1))) || tcol.color(T(x2)) != partner(tcol.color(T(x1))))
            fail(ErrorCode::InternalInvariant, "pairing edge " + std::to_string(x1) + "-" + std::to_string(x2) +
                                                   " did not receive {2a, 2b}");
        if (tcol.color(T(x1)) != Color::two_a)
            tcol.swap_classes(Color::two_a, Color::two_b);
        return lift(tcol);
    }

    const Vertex s = T(tc.s), y = T(tc.y);
    PackingColoring tcol;
    if (tc.shape == TildeShape::K4) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < 4; ++v)
            if (v != s && v != y)
                rest.push_back(v);
        tcol = PackingColoring::one_one_two_two(4);
        tcol.assign(s, Color::one_a);
        tcol.assign(y, Color::one_b);
        tcol.assign(rest[0], Color::two_a);
        tcol.assign(rest[1], Color::two_b);
    } else if (tc.shape == TildeShape::RingOfDiamonds) {
        tcol = color_ring_of_diamonds(tc.tilde, VertexPair{s, y});
    } else {
        const auto dec = oum_decompose(tc.tilde);
        tcol = canonical_color_with_edge(tc.tilde, dec, ordered(s, y), EdgePlacement::OnFactor);
        if (tcol.color(s) == Color::one_b)
            tcol.swap_classes(Color::one_a, Color::one_b);
    }
    if (tcol.color(s) != Color::one_a || tcol.color(y) != Color::one_b)
        fail(ErrorCode::InternalInvariant, "s-y did not receive {1a, 1b}");
    auto c = lift(tcol);
    c.assign(tc.u, Color::one_b);
    c.assign(tc.w, Color::one_a);
    c.assign(tc.x1, Color::two_a);
    // The root's K4 case uses the mirror image: s, w in 1b and u, y in 1a.
    if (root && tc.shape == TildeShape::K4)
        c.swap_classes(Color::one_a, Color::one_b);
    return c;
}

inline void require_valid_component(const MultiGraph &gi, const PackingColoring &c, const char *what) {
    auto result = verify(gi, c);
    if (!result.ok()) {
        const auto &v = result.violations.front();
        fail(ErrorCode::InternalInvariant, std::string(what) + ": vertices " + std::to_string(v.u) + " and " +
                                               std::to_string(v.v) + " conflict in class " + c.label_of(v.u));
    }
}

} // namespace detail

/// Colors the root component, whose only degree-2 vertex is v, with v in 2a.
inline PackingColoring color_root_component(const MultiGraph &g0, Vertex v) {
    auto tc = build_tilde(g0, v);
    if (tc.r() != 1)
        detail::precondition("root component has " + std::to_string(tc.r()) + " degree-2 vertices, expected 1");
    auto c = detail::color_from_tilde(tc, true);
    detail::require_valid_component(g0, c, "root component");
    return c;
}

/// A color from {2a, 2b} absent from the closed neighbourhood of q in the parent.
inline Color free_two_color(const MultiGraph &parent, const PackingColoring &parent_coloring, Vertex q) {
    bool seen_a = false, seen_b = false;
    auto look = [&](Vertex v) {
        if (!parent_coloring.assigned(v))
            return;
        seen_a |= parent_coloring.color(v) == Color::two_a;
        seen_b |= parent_coloring.color(v) == Color::two_b;
    };
    look(q);
    for (const auto &nb : parent.neighbors(q))
        look(nb.vertex);
    if (!seen_a)
        return Color::two_a;
    if (!seen_b)
        return Color::two_b;
    fail(ErrorCode::ClaimViolated, "both 2a and 2b occur in the closed neighbourhood of " + std::to_string(q));
}

inline ComponentKind classify_component(const MultiGraph &gi) {
    if (gi.order() == 3)
        return ComponentKind::Triangle;
    if (gi.order() == 4)
        return ComponentKind::Diamond;
    return ComponentKind::TypeIII;
}

struct ComponentColoring {
    PackingColoring coloring;
    std::optional<TildeConstruction> tilde;
};

namespace detail {

inline ComponentColoring extend_component_detailed(const MultiGraph &gi, Vertex x1, Color forced) {
    if (!is_two_class(forced))
        precondition("forced color must be 2a or 2b");
    ComponentColoring out;
    auto &c = out.coloring;
    switch (classify_component(gi)) {
    case ComponentKind::Triangle: {
        c = PackingColoring::one_one_two_two(3);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < 3; ++v)
            if (v != x1)
                rest.push_back(v);
        c.assign(x1, forced);
        c.assign(rest[0], Color::one_a);
        c.assign(rest[1], Color::one_b);
        break;
    }
    case ComponentKind::Diamond: {
        c = PackingColoring::one_one_two_two(4);
        std::vector<Vertex> inner;
        Vertex x2 = -1;
        for (Vertex v = 0; v < 4; ++v) {
            if (gi.degree(v) == 3)
                inner.push_back(v);
            else if (v != x1)
                x2 = v;
        }
        if (inner.size() != 2 || x2 < 0)
            precondition("4-vertex component is not a diamond");
        c.assign(inner[0], Color::one_a);
        c.assign(inner[1], Color::one_b);
        c.assign(x1, forced);
        c.assign(x2, partner(forced));
        break;
    }
    case ComponentKind::TypeIII: {
        out.tilde = build_tilde(gi, x1);
        c = color_from_tilde(*out.tilde, false);
        if (forced == Color::two_b)
            c.swap_classes(Color::two_a, Color::two_b);
        break;
    }
    }
    require_valid_component(gi, c, "component");
    return out;
}

} // namespace detail

/// Colors a non-root component (local ids) with its entry vertex x1 in `forced`.
inline PackingColoring extend_component(const MultiGraph &gi, Vertex x1, Color forced) {
    return detail::extend_component_detailed(gi, x1, forced).coloring;
}

/// What happened to one component during coloring.
struct ComponentStep {
    int component = -1;
    ComponentKind kind = ComponentKind::TypeIII;
    std::size_t degree_two = 0;
    bool root = false;
    TildeShape shape = TildeShape::None;
    Color entry_color = Color::two_a;
};

struct ColoringTrace {
    bool bridgeless = false;
    OumKind bridgeless_kind = OumKind::Built; // meaningful when bridgeless
    std::vector<ComponentStep> steps;         // in processing order
};

namespace detail {

// Bounded BFS from each vertex in `fresh` up to its class radius; any
// already-colored vertex of the same class inside the ball is a conflict.
inline void check_new_vertices(const MultiGraph &g, const PackingColoring &c, const std::vector<Vertex> &fresh) {
    std::vector<int> stamp(g.order(), -1), dist(g.order(), 0);
    int round = 0;
    for (Vertex v : fresh) {
        const int cls = c.class_of(v);
        const int radius = c.spec().radius(cls);
        std::vector<Vertex> frontier{v};
        stamp[static_cast<std::size_t>(v)] = round;
        dist[static_cast<std::size_t>(v)] = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const Vertex a = frontier[i];
            if (dist[static_cast<std::size_t>(a)] == radius)
                continue;
            for (const auto &nb : g.neighbors(a)) {
                const auto b = static_cast<std::size_t>(nb.vertex);
                if (stamp[b] == round)
                    continue;
                stamp[b] = round;
                dist[b] = dist[static_cast<std::size_t>(a)] + 1;
                frontier.push_back(nb.vertex);
                if (c.class_of(nb.vertex) == cls)
                    fail(ErrorCode::InternalInvariant, "vertices " + std::to_string(v) + " and " +
                                                           std::to_string(nb.vertex) + " share class " +
                                                           c.label_of(v) + " at distance " + std::to_string(dist[b]));
            }
        }
        ++round;
    }
}

// The up-neighbour q does not lie on a diamond of the parent's G~
// unless the parent itself is a diamond.
inline void check_entry_off_diamond(const TildeConstruction &parent, Vertex q_local) {
    const Vertex t = parent.to_tilde[static_cast<std::size_t>(q_local)];
    if (t < 0 || parent.shape == TildeShape::K4)
        return;
    for (const auto &d : find_diamonds(parent.tilde).diamonds)
        if (t == d.a || t == d.b || t == d.c || t == d.d)
            fail(ErrorCode::InternalInvariant, "up-neighbour " + std::to_string(parent.to_source[static_cast<std::size_t>(t)]) +
                                                   " (component-local) lies on a diamond of the parent's G~");
}

} // namespace detail

/// (1,1,2,2)-coloring of a connected claw-free cubic graph. Bridgeless inputs
/// go straight to the 2-edge-connected coloring; otherwise components of
/// G - B(G) are colored root first, then in BFS order, each child entry
/// taking a 2-color that is free around its up-neighbour.
inline PackingColoring color_claw_free_cubic(const MultiGraph &g, ColoringTrace *trace = nullptr) {
    detail::require_claw_free_cubic(g);
    if (bridge_pairs(g).empty()) {
        PackingColoring c;
        try {
            const auto dec = oum_decompose(g);
            if (trace) {
                trace->bridgeless = true;
                trace->bridgeless_kind = dec.kind;
            }
            c = color_two_edge_connected(g);
        } catch (const Error &e) {
            fail(ErrorCode::InternalInvariant, e.what());
        }
        return c;
    }

    const auto tree = build_bridge_tree(g);
    const std::size_t k = tree.components.size();
    std::vector<Subgraph> local(k);
    std::vector<PackingColoring> colorings(k);
    std::vector<std::optional<TildeConstruction>> tildes(k);
    auto global = PackingColoring::one_one_two_two(g.order());

    try {
        for (int idx : tree.bfs_order) {
            const auto ui = static_cast<std::size_t>(idx);
            const auto &comp = tree.components[ui];
            local[ui] = induced_subgraph(g, comp.vertices);
            const auto &sub = local[ui];
            ComponentStep step;
            step.component = idx;
            step.kind = comp.kind;
            step.degree_two = comp.attachments.size();

            if (idx == tree.root) {
                if (comp.kind != ComponentKind::TypeIII || comp.attachments.size() != 1)
                    fail(ErrorCode::InternalInvariant, "root component is not a Type III leaf");
                const Vertex v = sub.to_local[static_cast<std::size_t>(comp.attachments[0])];
                tildes[ui] = build_tilde(sub.graph, v);
                colorings[ui] = detail::color_from_tilde(*tildes[ui], true);
                detail::require_valid_component(sub.graph, colorings[ui], "root component");
                step.root = true;
                step.shape = tildes[ui]->shape;
                step.entry_color = Color::two_a;
            } else {
                const auto up = static_cast<std::size_t>(comp.parent);
                const Vertex q_local = local[up].to_local[static_cast<std::size_t>(comp.up_neighbor)];
                if (tree.components[up].kind == ComponentKind::TypeIII && tildes[up])
                    detail::check_entry_off_diamond(*tildes[up], q_local);
                const Color forced = free_two_color(local[up].graph, colorings[up], q_local);
                const Vertex x1 = sub.to_local[static_cast<std::size_t>(comp.entry)];
                auto cc = detail::extend_component_detailed(sub.graph, x1, forced);
                colorings[ui] = std::move(cc.coloring);
                tildes[ui] = std::move(cc.tilde);
                step.shape = tildes[ui] ? tildes[ui]->shape : TildeShape::None;
                step.entry_color = forced;
            }
            std::vector<Vertex> fresh;
            for (std::size_t i = 0; i < sub.to_global.size(); ++i) {
                global.assign(sub.to_global[i], colorings[ui].class_of(static_cast<Vertex>(i)));
                fresh.push_back(sub.to_global[i]);
            }
            detail::check_new_vertices(g, global, fresh);
            if (trace)
                trace->steps.push_back(step);
        }
    } catch (const Error &e) {
        if (e.code() == ErrorCode::InternalInvariant || e.code() == ErrorCode::ClaimViolated)
            throw;
        fail(ErrorCode::InternalInvariant, e.what());
    }

    auto result = verify(g, global);
    if (!result.ok())
        fail(ErrorCode::InternalInvariant, "final verification found " + std::to_string(result.violations.size()) +
                                               " conflicting pairs");
    return global;
}

} // namespace clawcolor

#endif
