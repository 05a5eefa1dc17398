#ifndef CLAWCOLOR_RECOGNITION_HPP
#define CLAWCOLOR_RECOGNITION_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "clawcolor/graph.hpp"

namespace clawcolor {

/// An induced K_{1,3}: `center` plus three pairwise nonadjacent neighbours.
struct ClawWitness {
    Vertex center;
    std::array<Vertex, 3> leaves;
};

/// std::nullopt when claw-free, otherwise the first claw found (smallest center).
inline std::optional<ClawWitness> find_claw(const MultiGraph &g) {
    for (std::size_t c = 0; c < g.order(); ++c) {
        auto nbs = g.neighbors(static_cast<Vertex>(c));
        for (std::size_t i = 0; i < nbs.size(); ++i)
            for (std::size_t j = i + 1; j < nbs.size(); ++j) {
                if (g.adjacent(nbs[i].vertex, nbs[j].vertex))
                    continue;
                for (std::size_t k = j + 1; k < nbs.size(); ++k)
                    if (!g.adjacent(nbs[i].vertex, nbs[k].vertex) && !g.adjacent(nbs[j].vertex, nbs[k].vertex))
                        return ClawWitness{static_cast<Vertex>(c), {nbs[i].vertex, nbs[j].vertex, nbs[k].vertex}};
            }
    }
    return std::nullopt;
}

inline bool is_claw_free(const MultiGraph &g) { return !find_claw(g).has_value(); }

/// Cut edges of every component, as ordered pairs sorted ascending. A pair
/// with multiplicity two or more is never a bridge. Works on disconnected
/// graphs; see find_bridges for the connected-only contract.
inline std::vector<VertexPair> bridge_pairs(const MultiGraph &g) {
    const std::size_t n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<VertexPair> bridges;
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    int timer = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        std::vector<Frame> stack{{static_cast<Vertex>(root), -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame &f = stack.back();
            auto nbs = g.neighbors(f.v);
            if (f.next < nbs.size()) {
                const Neighbor nb = nbs[f.next++];
                const auto w = static_cast<std::size_t>(nb.vertex);
                if (nb.vertex == f.parent)
                    continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({nb.vertex, f.v, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (done.parent < 0)
                continue;
            const auto p = static_cast<std::size_t>(done.parent);
            const auto c = static_cast<std::size_t>(done.v);
            low[p] = std::min(low[p], low[c]);
            if (low[c] > disc[p] && g.multiplicity(done.parent, done.v) == 1)
                bridges.push_back(ordered(done.parent, done.v));
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

inline std::vector<VertexPair> find_bridges(const MultiGraph &g) {
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "find_bridges requires a connected graph");
    return bridge_pairs(g);
}

inline bool is_two_edge_connected(const MultiGraph &g) {
    return g.order() > 0 && is_connected(g) && bridge_pairs(g).empty();
}

/// Induced diamond test on four vertices: b,c interior, a,d exterior.
inline bool is_induced_diamond(const MultiGraph &g, Vertex a, Vertex b, Vertex c, Vertex d) {
    return g.adjacent(b, c) && g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(d, b) && g.adjacent(d, c) &&
           !g.adjacent(a, d);
}

enum class ComponentKind { Triangle, Diamond, TypeIII };

constexpr std::string_view to_string(ComponentKind kind) noexcept {
    switch (kind) {
    case ComponentKind::Triangle: return "K3";
    case ComponentKind::Diamond: return "Diamond";
    case ComponentKind::TypeIII: return "TypeIII";
    }
    return "?";
}

/// One component of G - B(G), i.e. one node of the bridge tree.
struct BridgeComponent {
    ComponentKind kind = ComponentKind::TypeIII;
    std::vector<Vertex> vertices;    // sorted
    std::vector<Vertex> attachments; // vertices incident to a bridge, sorted
    int parent = -1;
    int depth = 0;
    std::vector<int> children; // ascending
    Vertex entry = -1;         // x_1: the only vertex with an up-neighbour
    Vertex up_neighbor = -1;   // its neighbour in the parent component
};

struct BridgeTree {
    std::vector<BridgeComponent> components; // ordered by smallest vertex
    std::vector<VertexPair> bridges;
    std::vector<std::pair<int, int>> tree_edges; // component indices, one per bridge
    std::vector<int> component_of;
    int root = 0;
    std::vector<int> bfs_order; // by depth, then component index

    MultiGraph tree() const {
        std::vector<VertexPair> pairs;
        for (const auto &[a, b] : tree_edges)
            pairs.push_back({a, b});
        return MultiGraph(components.size(), pairs);
    }
};

namespace detail {

inline std::vector<int> tree_bfs(const std::vector<std::vector<int>> &adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

inline int farthest(const std::vector<int> &dist) {
    int best = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] > dist[static_cast<std::size_t>(best)])
            best = static_cast<int>(i);
    return best;
}

inline void require_simple_connected_cubic(const MultiGraph &g) {
    if (g.order() == 0 || !is_connected(g))
        fail(ErrorCode::Disconnected, "graph must be connected and non-empty");
    if (!g.is_simple())
        fail(ErrorCode::NotSimple, "graph has parallel edges");
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) != 3)
            fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(g.degree(static_cast<Vertex>(v))));
}

inline std::string describe(const ClawWitness &w) {
    return "claw centered at " + std::to_string(w.center) + " with leaves " + std::to_string(w.leaves[0]) + " " +
           std::to_string(w.leaves[1]) + " " + std::to_string(w.leaves[2]);
}

inline void require_claw_free_cubic(const MultiGraph &g) {
    require_simple_connected_cubic(g);
    if (auto claw = find_claw(g))
        fail(ErrorCode::NotClawFree, describe(*claw));
}

} // namespace detail

/// Components of G - B(G) with their typing, the tree they form, and the
/// rooting used by the coloring: the root is an end of a diametral path found
/// by double BFS, ties broken towards the smallest component index.
inline BridgeTree build_bridge_tree(const MultiGraph &g) {
    detail::require_claw_free_cubic(g);
    BridgeTree t;
    t.bridges = bridge_pairs(g);

    std::vector<VertexPair> kept;
    for (const auto &e : g.edges()) {
        VertexPair p{e.u, e.v};
        if (!std::binary_search(t.bridges.begin(), t.bridges.end(), p))
            kept.push_back(p);
    }
    MultiGraph rest(g.order(), kept);
    int count = 0;
    t.component_of = connected_components(rest, &count);
    t.components.resize(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < g.order(); ++v)
        t.components[static_cast<std::size_t>(t.component_of[v])].vertices.push_back(static_cast<Vertex>(v));

    for (auto &comp : t.components) {
        const auto &vs = comp.vertices;
        if (vs.size() == 1)
            fail(ErrorCode::TypeIComponent, "vertex " + std::to_string(vs[0]) + " is isolated by bridges");
        auto sub = induced_subgraph(g, vs);
        bool all_two = true;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            int d = sub.graph.degree(static_cast<Vertex>(i));
            if (d == 2)
                comp.attachments.push_back(vs[i]);
            if (d != 2)
                all_two = false;
            if (d < 2)
                fail(ErrorCode::StructureViolation, "vertex " + std::to_string(vs[i]) + " is a leaf of its component");
        }
        if (all_two) {
            if (vs.size() != 3)
                fail(ErrorCode::NonK3Cycle, "cycle component of length " + std::to_string(vs.size()) +
                                                " containing vertex " + std::to_string(vs[0]));
            comp.kind = ComponentKind::Triangle;
        } else if (vs.size() == 4 && !comp.attachments.empty()) {
            // two degree-2 vertices, two degree-3: must be K4 minus an edge
            const auto &at = comp.attachments;
            std::vector<Vertex> inner;
            for (Vertex v : vs)
                if (std::find(at.begin(), at.end(), v) == at.end())
                    inner.push_back(v);
            if (at.size() != 2 || !is_induced_diamond(g, at[0], inner[0], inner[1], at[1]))
                fail(ErrorCode::StructureViolation, "4-vertex component is not a diamond");
            comp.kind = ComponentKind::Diamond;
        } else if (vs.size() >= 5 || comp.attachments.empty()) {
            comp.kind = ComponentKind::TypeIII; // a bridgeless K4 lands here too
        } else {
            fail(ErrorCode::StructureViolation, "unexpected component on " + std::to_string(vs.size()) + " vertices");
        }
    }

    std::vector<std::vector<int>> adj(t.components.size());
    for (const auto &b : t.bridges) {
        int ca = t.component_of[static_cast<std::size_t>(b.u)];
        int cb = t.component_of[static_cast<std::size_t>(b.v)];
        t.tree_edges.emplace_back(ca, cb);
        adj[static_cast<std::size_t>(ca)].push_back(cb);
        adj[static_cast<std::size_t>(cb)].push_back(ca);
    }
    for (auto &list : adj)
        std::sort(list.begin(), list.end());

    t.root = detail::farthest(detail::tree_bfs(adj, 0));
    auto depth = detail::tree_bfs(adj, t.root);
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (depth[i] < 0)
            fail(ErrorCode::StructureViolation, "bridge tree is disconnected");
        t.components[i].depth = depth[i];
    }
    for (const auto &b : t.bridges) {
        Vertex a = b.u, c = b.v;
        int ca = t.component_of[static_cast<std::size_t>(a)];
        int cc = t.component_of[static_cast<std::size_t>(c)];
        if (depth[static_cast<std::size_t>(ca)] > depth[static_cast<std::size_t>(cc)]) {
            std::swap(a, c);
            std::swap(ca, cc);
        }
        // ca is the parent, cc the child
        auto &child = t.components[static_cast<std::size_t>(cc)];
        if (child.entry != -1)
            fail(ErrorCode::StructureViolation, "component has two up-neighbours");
        child.parent = ca;
        child.entry = c;
        child.up_neighbor = a;
        t.components[static_cast<std::size_t>(ca)].children.push_back(cc);
    }
    for (auto &comp : t.components)
        std::sort(comp.children.begin(), comp.children.end());

    t.bfs_order.resize(t.components.size());
    for (std::size_t i = 0; i < t.bfs_order.size(); ++i)
        t.bfs_order[i] = static_cast<int>(i);
    std::stable_sort(t.bfs_order.begin(), t.bfs_order.end(), [&](int x, int y) {
        return t.components[static_cast<std::size_t>(x)].depth < t.components[static_cast<std::size_t>(y)].depth;
    });
    return t;
}

} // namespace clawcolor

#endif
