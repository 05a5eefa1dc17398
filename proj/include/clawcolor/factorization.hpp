#ifndef CLAWCOLOR_FACTORIZATION_HPP
#define CLAWCOLOR_FACTORIZATION_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clawcolor/graph.hpp"
#include "clawcolor/recognition.hpp"

namespace clawcolor {

struct Matching {
    std::vector<EdgeId> edges; // instance ids, ascending
    std::vector<Vertex> mate;  // -1 when unmatched
    bool perfect = false;
};

/// One cycle of a 2-factor: edges[j] joins vertices[j] and vertices[j+1 mod m].
/// Length-2 cycles are digons made of two parallel edge copies.
struct FactorCycle {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

struct TwoFactor {
    std::vector<FactorCycle> cycles;
    std::vector<EdgeId> matching; // complement of the factor, ascending

    bool contains(EdgeId e) const {
        for (const auto &c : cycles)
            if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end())
                return true;
        return false;
    }
};

namespace detail {

/// Edmonds' blossom algorithm, O(n^3), on a simple adjacency structure.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : n_(adj.size()), adj_(std::move(adj)), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<int> run() {
        // greedy start
        for (std::size_t v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            for (int w : adj_[v])
                if (match_[static_cast<std::size_t>(w)] == -1) {
                    match_[v] = w;
                    match_[static_cast<std::size_t>(w)] = static_cast<int>(v);
                    break;
                }
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            int end = find_path(static_cast<int>(v));
            while (end != -1) {
                int pv = parent_[static_cast<std::size_t>(end)];
                int ppv = match_[static_cast<std::size_t>(pv)];
                match_[static_cast<std::size_t>(end)] = pv;
                match_[static_cast<std::size_t>(pv)] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1)
                break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        while (true) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)])
                return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int m = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = m;
            v = parent_[static_cast<std::size_t>(m)];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = static_cast<int>(i);
        used_[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                const auto t = static_cast<std::size_t>(to);
                if (base_[static_cast<std::size_t>(v)] == base_[t] || match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root || (match_[t] != -1 && parent_[static_cast<std::size_t>(match_[t])] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (blossom_[static_cast<std::size_t>(base_[i])]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(static_cast<int>(i));
                            }
                        }
                    }
                } else if (parent_[t] == -1) {
                    parent_[t] = v;
                    if (match_[t] == -1)
                        return to;
                    used_[static_cast<std::size_t>(match_[t])] = 1;
                    queue.push_back(match_[t]);
                }
            }
        }
        return -1;
    }

    std::size_t n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

/// Maximum matching over the edge copies not listed in `excluded`. Parallel
/// copies collapse to one candidate pair; a matched pair is attributed to its
/// lowest-numbered available copy.
inline Matching maximum_matching_excluding(const MultiGraph &g, std::span<const EdgeId> excluded) {
    const auto instances = g.edge_instances();
    std::vector<char> banned(instances.size(), 0);
    for (EdgeId e : excluded)
        banned[static_cast<std::size_t>(e)] = 1;
    std::vector<std::vector<int>> adj(g.order());
    std::map<VertexPair, EdgeId> first_available;
    for (std::size_t id = 0; id < instances.size(); ++id) {
        if (banned[id])
            continue;
        auto [it, inserted] = first_available.emplace(instances[id], static_cast<EdgeId>(id));
        if (inserted) {
            adj[static_cast<std::size_t>(instances[id].u)].push_back(instances[id].v);
            adj[static_cast<std::size_t>(instances[id].v)].push_back(instances[id].u);
        }
    }
    auto mate = BlossomMatcher(std::move(adj)).run();
    Matching m;
    m.mate.assign(mate.begin(), mate.end());
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] > static_cast<int>(v))
            m.edges.push_back(first_available.at({static_cast<Vertex>(v), mate[v]}));
    std::sort(m.edges.begin(), m.edges.end());
    m.perfect = 2 * m.edges.size() == g.order();
    return m;
}

} // namespace detail

inline std::optional<Matching> perfect_matching(const MultiGraph &g) {
    auto m = detail::maximum_matching_excluding(g, {});
    if (!m.perfect)
        return std::nullopt;
    return m;
}

/// Splits the complement of `matching` (edge instance ids) into cycles. The
/// complement must be 2-regular. Cycles start at their smallest vertex and
/// leave it along the smallest neighbour.
inline TwoFactor two_factor_from_matching(const MultiGraph &g, std::span<const EdgeId> matching) {
    const auto instances = g.edge_instances();
    std::vector<char> in_matching(instances.size(), 0);
    for (EdgeId e : matching)
        in_matching[static_cast<std::size_t>(e)] = 1;
    std::vector<std::vector<EdgeId>> incident(g.order());
    for (std::size_t id = 0; id < instances.size(); ++id) {
        if (in_matching[id])
            continue;
        incident[static_cast<std::size_t>(instances[id].u)].push_back(static_cast<EdgeId>(id));
        incident[static_cast<std::size_t>(instances[id].v)].push_back(static_cast<EdgeId>(id));
    }
    for (std::size_t v = 0; v < g.order(); ++v)
        if (incident[v].size() != 2)
            fail(ErrorCode::NoMatching, "complement is not 2-regular at vertex " + std::to_string(v));

    auto other = [&](EdgeId e, Vertex v) {
        const auto &p = instances[static_cast<std::size_t>(e)];
        return p.u == v ? p.v : p.u;
    };
    TwoFactor factor;
    factor.matching.assign(matching.begin(), matching.end());
    std::sort(factor.matching.begin(), factor.matching.end());
    std::vector<char> visited(g.order(), 0);
    std::vector<char> edge_used(instances.size(), 0);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (visited[s])
            continue;
        FactorCycle cycle;
        Vertex v = static_cast<Vertex>(s);
        auto pick = incident[s];
        std::sort(pick.begin(), pick.end(), [&](EdgeId x, EdgeId y) {
            return std::pair(other(x, v), x) < std::pair(other(y, v), y);
        });
        EdgeId e = pick[0];
        while (!visited[static_cast<std::size_t>(v)]) {
            visited[static_cast<std::size_t>(v)] = 1;
            cycle.vertices.push_back(v);
            cycle.edges.push_back(e);
            edge_used[static_cast<std::size_t>(e)] = 1;
            v = other(e, v);
            const auto &inc = incident[static_cast<std::size_t>(v)];
            e = edge_used[static_cast<std::size_t>(inc[0])] ? inc[1] : inc[0];
        }
        factor.cycles.push_back(std::move(cycle));
    }
    return factor;
}

namespace detail {

inline void require_cubic(const MultiGraph &g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) != 3)
            fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(g.degree(static_cast<Vertex>(v))));
}

inline void require_two_edge_connected_cubic(const MultiGraph &g) {
    require_cubic(g);
    if (!is_connected(g) || !bridge_pairs(g).empty())
        fail(ErrorCode::NotTwoEdgeConnected, "multigraph is not 2-edge-connected");
}

inline void require_edge(const MultiGraph &g, EdgeId e) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.size())
        fail(ErrorCode::EdgeAbsent, "edge id " + std::to_string(e) + " out of range");
}

} // namespace detail

/// 2-factor of a bridgeless cubic multigraph: the complement of a perfect matching.
inline TwoFactor two_factor(const MultiGraph &g) {
    detail::require_cubic(g);
    if (!bridge_pairs(g).empty())
        fail(ErrorCode::NotBridgeless, "multigraph has a bridge");
    auto m = perfect_matching(g);
    if (!m)
        fail(ErrorCode::NoMatching, "bridgeless cubic multigraph without a perfect matching");
    return two_factor_from_matching(g, m->edges);
}

/// 2-factor whose cycles use edge `e`. With f the smallest other edge, a
/// perfect matching of g - {e, f} exists in every 2-edge-connected cubic
/// multigraph; its complement is the factor.
inline TwoFactor two_factor_through(const MultiGraph &g, EdgeId e) {
    detail::require_edge(g, e);
    detail::require_two_edge_connected_cubic(g);
    const EdgeId f = (e == 0) ? 1 : 0;
    const std::vector<EdgeId> excluded{e, f};
    auto m = detail::maximum_matching_excluding(g, excluded);
    if (!m.perfect)
        fail(ErrorCode::NoMatching, "no perfect matching avoiding edges " + std::to_string(e) + ", " +
                                        std::to_string(f));
    return two_factor_from_matching(g, m.edges);
}

/// 2-factor whose complementary perfect matching contains edge `e`. Deleting
/// the other two edge copies at one endpoint of e leaves a graph with a
/// perfect matching, which must then use e.
inline TwoFactor two_factor_avoiding(const MultiGraph &g, EdgeId e) {
    detail::require_edge(g, e);
    detail::require_two_edge_connected_cubic(g);
    const auto instances = g.edge_instances();
    const Vertex u = instances[static_cast<std::size_t>(e)].u;
    std::vector<EdgeId> excluded;
    for (std::size_t id = 0; id < instances.size(); ++id)
        if (static_cast<EdgeId>(id) != e && (instances[id].u == u || instances[id].v == u))
            excluded.push_back(static_cast<EdgeId>(id));
    auto m = detail::maximum_matching_excluding(g, excluded);
    if (!m.perfect || !std::binary_search(m.edges.begin(), m.edges.end(), e))
        fail(ErrorCode::NoMatching, "no perfect matching through edge " + std::to_string(e));
    return two_factor_from_matching(g, m.edges);
}

} // namespace clawcolor

#endif
