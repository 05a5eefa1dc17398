#ifndef CLAWCOLOR_GENERATORS_HPP
#define CLAWCOLOR_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clawcolor/error.hpp"
#include "clawcolor/fixtures.hpp"
#include "clawcolor/graph.hpp"
#include "clawcolor/io.hpp"
#include "clawcolor/oum.hpp"
#include "clawcolor/recognition.hpp"

namespace clawcolor {

/// splitmix64 (Steele, Lea, Flood). Bounded draws use rejection so results do
/// not depend on the standard library's distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1)
            return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % bound;
    }

    template <class T> void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::uint64_t state_;
};

/// One string length per H-edge instance (canonical order). A nonzero seed
/// shuffles the output labels.
struct ExpansionSpec {
    std::vector<int> string_length;
    std::uint64_t seed = 0;

    static ExpansionSpec plain(const MultiGraph &h) { return {std::vector<int>(h.size(), 0), 0}; }
};

/// Each H-vertex i becomes the triangle 3i, 3i+1, 3i+2; each H-edge joins
/// the next free corners of its end triangles, through its string of
/// diamonds when it has one.
inline MultiGraph expand_to_clawfree(const MultiGraph &h, const ExpansionSpec &spec) {
    for (std::size_t v = 0; v < h.order(); ++v)
        if (h.degree(static_cast<Vertex>(v)) != 3)
            fail(ErrorCode::NotCubicH, "H-vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(h.degree(static_cast<Vertex>(v))));
    if (h.order() == 0 || !is_connected(h) || !bridge_pairs(h).empty())
        fail(ErrorCode::NotTwoEdgeConnectedH, "H is not 2-edge-connected");
    const auto instances = h.edge_instances();
    if (spec.string_length.size() != instances.size())
        fail(ErrorCode::InvalidSpec, "expansion spec lists " + std::to_string(spec.string_length.size()) +
                                         " string lengths for " + std::to_string(instances.size()) + " H-edges");

    std::size_t n = 3 * h.order();
    for (int len : spec.string_length) {
        if (len < 0)
            fail(ErrorCode::InvalidSpec, "negative string length");
        n += 4 * static_cast<std::size_t>(len);
    }
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < h.order(); ++i) {
        const auto b = static_cast<Vertex>(3 * i);
        edges.insert(edges.end(), {{b, b + 1}, {b + 1, b + 2}, {b, b + 2}});
    }
    std::vector<int> next_corner(h.order(), 0);
    auto corner = [&](Vertex hv) { return static_cast<Vertex>(3 * hv + next_corner[static_cast<std::size_t>(hv)]++); };
    auto fresh = static_cast<Vertex>(3 * h.order());
    for (std::size_t id = 0; id < instances.size(); ++id) {
        Vertex prev = corner(instances[id].u);
        const Vertex last = corner(instances[id].v);
        for (int k = 0; k < spec.string_length[id]; ++k) {
            const Vertex a = fresh, b = fresh + 1, c = fresh + 2, d = fresh + 3;
            fresh += 4;
            edges.insert(edges.end(), {{prev, a}, {a, b}, {a, c}, {b, c}, {b, d}, {c, d}});
            prev = d;
        }
        edges.push_back({prev, last});
    }
    MultiGraph g(n, edges);
    if (spec.seed == 0)
        return g;
    SplitMix64 rng(spec.seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return relabel(g, perm);
}

/// k diamonds closed into a ring; diamond i is 4i (exterior), 4i+1, 4i+2, 4i+3 (exterior).
inline MultiGraph gen_ring_of_diamonds(int k) {
    if (k < 2)
        fail(ErrorCode::KTooSmall, "a ring needs at least 2 diamonds, got " + std::to_string(k));
    std::vector<VertexPair> edges;
    for (Vertex i = 0; i < k; ++i) {
        const Vertex a = 4 * i, b = a + 1, c = a + 2, d = a + 3;
        edges.insert(edges.end(), {{a, b}, {a, c}, {b, c}, {b, d}, {c, d}, {d, (4 * (i + 1)) % (4 * k)}});
    }
    return MultiGraph(static_cast<std::size_t>(4 * k), edges);
}

/// Random 2-edge-connected loopless cubic multigraph: a random 2-factor
/// (cycles of length >= 2, digons doubled) plus a random perfect matching,
/// resampled until 2-edge-connected.
inline MultiGraph gen_cubic_multigraph(int n, std::uint64_t seed, int max_tries = 10000) {
    if (n < 2 || n % 2 != 0)
        fail(ErrorCode::OddOrder, "order must be even and at least 2, got " + std::to_string(n));
    SplitMix64 rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::vector<VertexPair> edges;
        std::size_t start = 0;
        while (start < order.size()) {
            // cycle length in [2, remaining], never leaving a single vertex behind
            const std::size_t remaining = order.size() - start;
            std::size_t len = remaining;
            if (remaining >= 4) {
                len = 2 + static_cast<std::size_t>(rng.below(remaining - 1));
                if (remaining - len == 1)
                    len = remaining;
            }
            for (std::size_t i = 0; i < len; ++i)
                edges.push_back({order[start + i], order[start + (i + 1) % len]});
            start += len;
        }
        rng.shuffle(order);
        for (std::size_t i = 0; i < order.size(); i += 2)
            edges.push_back({order[i], order[i + 1]});
        MultiGraph g(static_cast<std::size_t>(n), edges);
        if (is_connected(g) && bridge_pairs(g).empty())
            return g;
    }
    fail(ErrorCode::RetryLimit, "no 2-edge-connected sample in " + std::to_string(max_tries) + " tries");
}

/// One requested node of a bridge tree.
struct ComponentRequest {
    ComponentKind kind;
    int attachments;
};

/// "K3:3,D:2,III:1"; the count may be omitted for K3 and D.
inline std::vector<ComponentRequest> parse_tree_spec(std::string_view text) {
    std::vector<ComponentRequest> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto token = detail::trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (token.empty())
            fail(ErrorCode::MalformedInput, "empty component in tree spec");
        auto colon = token.find(':');
        auto name = token.substr(0, colon);
        long long count = -1;
        if (colon != std::string_view::npos && !detail::parse_int(token.substr(colon + 1), count))
            fail(ErrorCode::MalformedInput, "bad attachment count in \"" + std::string(token) + "\"");
        ComponentRequest req{};
        if (name == "K3") {
            req = {ComponentKind::Triangle, count < 0 ? 3 : static_cast<int>(count)};
        } else if (name == "D") {
            req = {ComponentKind::Diamond, count < 0 ? 2 : static_cast<int>(count)};
        } else if (name == "III") {
            if (count < 0)
                fail(ErrorCode::MalformedInput, "III needs an attachment count");
            req = {ComponentKind::TypeIII, static_cast<int>(count)};
        } else {
            fail(ErrorCode::MalformedInput, "unknown component kind \"" + std::string(name) + "\"");
        }
        out.push_back(req);
    }
    return out;
}

/// A Type III component: 2-edge-connected, at least 5 vertices, `attachments`
/// pairwise nonadjacent degree-2 vertices whose neighbours are adjacent.
struct TypeThreeComponent {
    MultiGraph graph;
    std::vector<Vertex> attachments;
};

namespace detail {

inline bool on_triangle(const std::vector<std::set<Vertex>> &adj, Vertex a, Vertex b) {
    for (Vertex z : adj[static_cast<std::size_t>(a)])
        if (z != b && adj[static_cast<std::size_t>(b)].count(z))
            return true;
    return false;
}

inline MultiGraph from_adjacency(const std::vector<std::set<Vertex>> &adj) {
    std::vector<VertexPair> edges;
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (Vertex w : adj[v])
            if (static_cast<Vertex>(v) < w)
                edges.push_back({static_cast<Vertex>(v), w});
    return MultiGraph(adj.size(), edges);
}

inline std::vector<std::set<Vertex>> to_adjacency(const MultiGraph &g) {
    std::vector<std::set<Vertex>> adj(g.order());
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    return adj;
}

inline MultiGraph random_base(SplitMix64 &rng, bool allow_k4) {
    const auto pick = rng.below(allow_k4 ? 5 : 4);
    if (pick == 4)
        return fixtures::k4();
    if (pick == 3)
        return gen_ring_of_diamonds(2 + static_cast<int>(rng.below(3)));
    const int hn = 2 * (1 + static_cast<int>(rng.below(3)));
    MultiGraph h = gen_cubic_multigraph(hn, rng.next());
    ExpansionSpec spec{std::vector<int>(h.size(), 0), 0};
    for (auto &len : spec.string_length)
        len = rng.below(4) == 0 ? 1 : 0;
    return expand_to_clawfree(h, spec);
}

} // namespace detail

/// Builds a Type III component from a random 2-edge-connected claw-free cubic
/// base: deleting a non-triangle edge frees two attachments, and cutting a
/// pendant triangle into an edge s-y (s-u, u-w, w-y, plus x on u and w) frees one.
inline TypeThreeComponent gen_type_three(int r, SplitMix64 &rng, int max_tries = 2000) {
    if (r < 1)
        fail(ErrorCode::InfeasibleSpec, "Type III component needs at least one attachment");
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        const bool k4_base_ok = r == 1;
        MultiGraph base = detail::random_base(rng, k4_base_ok);
        auto adj = detail::to_adjacency(base);
        const bool k4_base = is_k4(base);
        std::vector<Vertex> attach;
        auto is_attachment = [&](Vertex v) { return std::find(attach.begin(), attach.end(), v) != attach.end(); };
        auto touches_attachment = [&](Vertex v) {
            for (Vertex z : adj[static_cast<std::size_t>(v)])
                if (is_attachment(z))
                    return true;
            return false;
        };
        auto candidate_edges = [&](bool allow_triangle) {
            std::vector<VertexPair> out;
            for (std::size_t v = 0; v < adj.size(); ++v)
                for (Vertex w : adj[v])
                    if (static_cast<Vertex>(v) < w && (allow_triangle || !detail::on_triangle(adj, static_cast<Vertex>(v), w)))
                        out.push_back({static_cast<Vertex>(v), w});
            return out;
        };

        const int deletions = k4_base ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(r / 2 + 1)));
        bool ok = true;
        for (int k = 0; k < deletions && ok; ++k) {
            auto cands = candidate_edges(false);
            rng.shuffle(cands);
            ok = false;
            for (const auto &[s, y] : cands) {
                if (is_attachment(s) || is_attachment(y) || touches_attachment(s) || touches_attachment(y))
                    continue;
                adj[static_cast<std::size_t>(s)].erase(y);
                adj[static_cast<std::size_t>(y)].erase(s);
                auto trial = detail::from_adjacency(adj);
                if (is_connected(trial) && bridge_pairs(trial).empty()) {
                    attach.push_back(s);
                    attach.push_back(y);
                    ok = true;
                    break;
                }
                adj[static_cast<std::size_t>(s)].insert(y);
                adj[static_cast<std::size_t>(y)].insert(s);
            }
        }
        if (!ok)
            continue;
        for (int k = 0; k < r - 2 * deletions && ok; ++k) {
            auto cands = candidate_edges(k4_base);
            if (cands.empty()) {
                ok = false;
                break;
            }
            const auto [s, y] = cands[static_cast<std::size_t>(rng.below(cands.size()))];
            const auto u = static_cast<Vertex>(adj.size()), w = u + 1, x = u + 2;
            adj.resize(adj.size() + 3);
            auto link = [&](Vertex a, Vertex b) {
                adj[static_cast<std::size_t>(a)].insert(b);
                adj[static_cast<std::size_t>(b)].insert(a);
            };
            adj[static_cast<std::size_t>(s)].erase(y);
            adj[static_cast<std::size_t>(y)].erase(s);
            link(s, u);
            link(u, w);
            link(w, y);
            link(u, x);
            link(w, x);
            attach.push_back(x);
        }
        if (!ok)
            continue;
        auto g = detail::from_adjacency(adj);
        if (!is_connected(g) || !bridge_pairs(g).empty() || !is_claw_free(g) || g.order() < 5)
            continue;
        std::sort(attach.begin(), attach.end());
        return {std::move(g), std::move(attach)};
    }
    fail(ErrorCode::RetryLimit, "could not build a Type III component with " + std::to_string(r) + " attachments");
}

/// A bridged graph together with the tree it was assembled from.
struct BridgedGraph {
    MultiGraph graph;
    MultiGraph tree;                   // over component indices of the request
    std::vector<ComponentKind> kinds;  // per request
    std::vector<int> component_of;     // request index of every vertex
};

/// Assembles a connected claw-free cubic graph whose bridge tree has the
/// requested components. The tree is a seeded Pruefer decoding of the
/// attachment counts; output labels are shuffled.
inline BridgedGraph gen_bridged(const std::vector<ComponentRequest> &request, std::uint64_t seed) {
    const std::size_t k = request.size();
    if (k < 2)
        fail(ErrorCode::InfeasibleSpec, "a bridged graph needs at least two components");
    int total = 0;
    for (const auto &req : request) {
        if (req.kind == ComponentKind::Triangle && req.attachments != 3)
            fail(ErrorCode::InfeasibleSpec, "K3 has exactly 3 attachments, requested " + std::to_string(req.attachments));
        if (req.kind == ComponentKind::Diamond && req.attachments != 2)
            fail(ErrorCode::InfeasibleSpec,
                 "diamond has exactly 2 attachments, requested " + std::to_string(req.attachments));
        if (req.attachments < 1)
            fail(ErrorCode::InfeasibleSpec, "every component needs at least one bridge");
        total += req.attachments;
    }
    if (total != 2 * static_cast<int>(k - 1))
        fail(ErrorCode::InfeasibleSpec, "attachment counts sum to " + std::to_string(total) + ", a tree on " +
                                            std::to_string(k) + " components needs " + std::to_string(2 * (k - 1)));

    SplitMix64 rng(seed);
    // Pruefer sequence: component i appears attachments - 1 times.
    std::vector<int> prufer;
    for (std::size_t i = 0; i < k; ++i)
        for (int j = 1; j < request[i].attachments; ++j)
            prufer.push_back(static_cast<int>(i));
    rng.shuffle(prufer);
    std::vector<int> remaining(k);
    for (std::size_t i = 0; i < k; ++i)
        remaining[i] = request[i].attachments;
    std::vector<std::pair<int, int>> tree_edges;
    for (int p : prufer) {
        int leaf = -1;
        for (std::size_t i = 0; i < k; ++i)
            if (remaining[i] == 1) {
                leaf = static_cast<int>(i);
                break;
            }
        tree_edges.emplace_back(leaf, p);
        remaining[static_cast<std::size_t>(leaf)] = 0;
        --remaining[static_cast<std::size_t>(p)];
    }
    std::vector<int> last;
    for (std::size_t i = 0; i < k; ++i)
        if (remaining[i] == 1)
            last.push_back(static_cast<int>(i));
    tree_edges.emplace_back(last[0], last[1]);

    BridgedGraph out;
    std::vector<VertexPair> edges;
    std::vector<std::vector<Vertex>> free_attachments(k);
    Vertex offset = 0;
    for (std::size_t i = 0; i < k; ++i) {
        MultiGraph part;
        std::vector<Vertex> att;
        switch (request[i].kind) {
        case ComponentKind::Triangle:
            part = MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}});
            att = {0, 1, 2};
            break;
        case ComponentKind::Diamond:
            part = MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
            att = {0, 3};
            break;
        case ComponentKind::TypeIII: {
            auto comp = gen_type_three(request[i].attachments, rng);
            part = std::move(comp.graph);
            att = std::move(comp.attachments);
            break;
        }
        }
        for (const auto &[a, b] : part.edge_instances())
            edges.push_back({a + offset, b + offset});
        for (Vertex v : att)
            free_attachments[i].push_back(v + offset);
        rng.shuffle(free_attachments[i]);
        out.component_of.insert(out.component_of.end(), part.order(), static_cast<int>(i));
        out.kinds.push_back(request[i].kind);
        offset += static_cast<Vertex>(part.order());
    }
    std::vector<VertexPair> tree_pairs;
    for (const auto &[a, b] : tree_edges) {
        auto &fa = free_attachments[static_cast<std::size_t>(a)];
        auto &fb = free_attachments[static_cast<std::size_t>(b)];
        edges.push_back({fa.back(), fb.back()});
        fa.pop_back();
        fb.pop_back();
        tree_pairs.push_back({a, b});
    }
    out.tree = MultiGraph(k, tree_pairs);

    const auto n = static_cast<std::size_t>(offset);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    out.graph = relabel(MultiGraph(n, edges), perm);
    std::vector<int> comp_of(n);
    for (std::size_t v = 0; v < n; ++v)
        comp_of[static_cast<std::size_t>(perm[v])] = out.component_of[v];
    out.component_of = std::move(comp_of);
    return out;
}

inline BridgedGraph gen_bridged(std::string_view tree_spec, std::uint64_t seed) {
    return gen_bridged(parse_tree_spec(tree_spec), seed);
}

} // namespace clawcolor

#endif
