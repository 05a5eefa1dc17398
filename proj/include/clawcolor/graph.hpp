#ifndef CLAWCOLOR_GRAPH_HPP
#define CLAWCOLOR_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clawcolor/error.hpp"

namespace clawcolor {

using Vertex = std::int32_t;
/// Index of one edge copy in MultiGraph::edge_instances().
using EdgeId = std::int32_t;

struct VertexPair {
    Vertex u;
    Vertex v;

    friend bool operator==(const VertexPair &, const VertexPair &) = default;
    friend auto operator<=>(const VertexPair &, const VertexPair &) = default;
};

/// An unordered vertex pair stored once, u < v, together with its multiplicity.
struct Edge {
    Vertex u;
    Vertex v;
    int multiplicity;

    friend bool operator==(const Edge &, const Edge &) = default;
};

struct Neighbor {
    Vertex vertex;
    int multiplicity;
};

inline VertexPair ordered(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// Loop-free undirected multigraph on vertices 0..n-1. Immutable once built.
///
/// Edges are kept in canonical form: each unordered pair appears once, sorted
/// lexicographically, with its multiplicity. The individual copies of the
/// edges are addressable through edge_instances(), whose order is the
/// canonical pair order with copies of one pair consecutive.
class MultiGraph {
public:
    MultiGraph() = default;

    MultiGraph(std::size_t n, std::span<const VertexPair> edge_list) : n_(n), adjacency_(n), degree_(n, 0) {
        std::vector<VertexPair> pairs;
        pairs.reserve(edge_list.size());
        for (const auto &[a, b] : edge_list) {
            if (a < 0 || static_cast<std::size_t>(a) >= n)
                fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(a) + " with n=" + std::to_string(n));
            if (b < 0 || static_cast<std::size_t>(b) >= n)
                fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(b) + " with n=" + std::to_string(n));
            if (a == b)
                fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
            pairs.push_back(ordered(a, b));
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto &p : pairs) {
            if (!edges_.empty() && edges_.back().u == p.u && edges_.back().v == p.v)
                ++edges_.back().multiplicity;
            else
                edges_.push_back({p.u, p.v, 1});
        }
        for (const auto &e : edges_) {
            adjacency_[e.u].push_back({e.v, e.multiplicity});
            adjacency_[e.v].push_back({e.u, e.multiplicity});
            degree_[e.u] += e.multiplicity;
            degree_[e.v] += e.multiplicity;
            edge_count_ += static_cast<std::size_t>(e.multiplicity);
        }
        for (auto &list : adjacency_)
            std::sort(list.begin(), list.end(), [](const Neighbor &x, const Neighbor &y) { return x.vertex < y.vertex; });
    }

    MultiGraph(std::size_t n, std::initializer_list<VertexPair> edge_list)
        : MultiGraph(n, std::span<const VertexPair>(edge_list.begin(), edge_list.size())) {}

    std::size_t order() const noexcept { return n_; }
    /// Number of edges counted with multiplicity.
    std::size_t size() const noexcept { return edge_count_; }

    const std::vector<Edge> &edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

    int multiplicity(Vertex a, Vertex b) const {
        const auto &list = adjacency_[static_cast<std::size_t>(a)];
        auto it = std::lower_bound(list.begin(), list.end(), b,
                                   [](const Neighbor &x, Vertex key) { return x.vertex < key; });
        return (it != list.end() && it->vertex == b) ? it->multiplicity : 0;
    }
    bool adjacent(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }

    bool is_simple() const {
        return std::all_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.multiplicity == 1; });
    }

    std::vector<VertexPair> edge_instances() const {
        std::vector<VertexPair> out;
        out.reserve(edge_count_);
        for (const auto &e : edges_)
            for (int k = 0; k < e.multiplicity; ++k)
                out.push_back({e.u, e.v});
        return out;
    }

    friend bool operator==(const MultiGraph &a, const MultiGraph &b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<int> degree_;
};

inline MultiGraph build_multigraph(std::size_t n, std::span<const VertexPair> edge_list) {
    return MultiGraph(n, edge_list);
}

inline bool is_cubic(const MultiGraph &g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) != 3)
            return false;
    return true;
}

/// Hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    std::size_t order() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
    int &at(Vertex u, Vertex v) { return d_[index(u, v)]; }

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v); }

    std::size_t n_ = 0;
    std::vector<int> d_;
};

/// BFS from source; vertices beyond max_depth (or unreachable) get kUnreachable.
inline std::vector<int> bfs_distances(const MultiGraph &g, Vertex source,
                                      int max_depth = DistanceMatrix::kUnreachable) {
    std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        int dv = dist[static_cast<std::size_t>(v)];
        if (dv >= max_depth)
            continue;
        for (const auto &nb : g.neighbors(v)) {
            auto &dw = dist[static_cast<std::size_t>(nb.vertex)];
            if (dw == DistanceMatrix::kUnreachable) {
                dw = dv + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

inline DistanceMatrix all_pairs_distances(const MultiGraph &g) {
    DistanceMatrix d(g.order());
    for (std::size_t s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, static_cast<Vertex>(s));
        for (std::size_t t = 0; t < g.order(); ++t)
            d.at(static_cast<Vertex>(s), static_cast<Vertex>(t)) = row[t];
    }
    return d;
}

/// Component label per vertex, labels numbered by smallest member.
inline std::vector<int> connected_components(const MultiGraph &g, int *count = nullptr) {
    std::vector<int> label(g.order(), -1);
    int next = 0;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (label[s] != -1)
            continue;
        std::vector<Vertex> stack{static_cast<Vertex>(s)};
        label[s] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto &nb : g.neighbors(v)) {
                if (label[static_cast<std::size_t>(nb.vertex)] == -1) {
                    label[static_cast<std::size_t>(nb.vertex)] = next;
                    stack.push_back(nb.vertex);
                }
            }
        }
        ++next;
    }
    if (count)
        *count = next;
    return label;
}

inline bool is_connected(const MultiGraph &g) {
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

/// Induced subgraph on `vertices` with local ids following the given order.
struct Subgraph {
    MultiGraph graph;
    std::vector<Vertex> to_global;
    std::vector<Vertex> to_local; // -1 for vertices outside the subgraph
};

inline Subgraph induced_subgraph(const MultiGraph &g, std::span<const Vertex> vertices) {
    Subgraph sub;
    sub.to_global.assign(vertices.begin(), vertices.end());
    sub.to_local.assign(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        sub.to_local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<VertexPair> local_edges;
    for (const auto &e : g.edges()) {
        Vertex a = sub.to_local[static_cast<std::size_t>(e.u)];
        Vertex b = sub.to_local[static_cast<std::size_t>(e.v)];
        if (a < 0 || b < 0)
            continue;
        for (int k = 0; k < e.multiplicity; ++k)
            local_edges.push_back({a, b});
    }
    sub.graph = MultiGraph(vertices.size(), local_edges);
    return sub;
}

/// Same graph with vertex v renamed to perm[v].
inline MultiGraph relabel(const MultiGraph &g, std::span<const Vertex> perm) {
    std::vector<VertexPair> out;
    for (const auto &[u, v] : g.edge_instances())
        out.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
    return MultiGraph(g.order(), out);
}

} // namespace clawcolor

#endif
