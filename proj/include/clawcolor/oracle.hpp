#ifndef CLAWCOLOR_ORACLE_HPP
#define CLAWCOLOR_ORACLE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "clawcolor/coloring.hpp"
#include "clawcolor/graph.hpp"

namespace clawcolor {

/// Two vertices of class `cls` at distance <= its radius.
struct Violation {
    int cls;
    Vertex u, v;
    int distance;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct VerifyResult {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Exhaustive check: for each vertex, every vertex within its class radius is
/// examined by a bounded BFS, so each conflicting pair is found (reported once, u < v).
inline VerifyResult verify(const MultiGraph &g, const SPackingSpec &spec, const PackingColoring &c) {
    if (c.order() != g.order())
        fail(ErrorCode::PartialColoring, "coloring covers " + std::to_string(c.order()) + " of " +
                                             std::to_string(g.order()) + " vertices");
    for (std::size_t v = 0; v < g.order(); ++v) {
        int cls = c.class_of(static_cast<Vertex>(v));
        if (cls == PackingColoring::kUnassigned)
            fail(ErrorCode::PartialColoring, "vertex " + std::to_string(v) + " has no color");
        if (cls < 0 || static_cast<std::size_t>(cls) >= spec.classes())
            fail(ErrorCode::PartialColoring, "vertex " + std::to_string(v) + " has class outside the spec");
    }
    VerifyResult result;
    for (std::size_t u = 0; u < g.order(); ++u) {
        const Vertex uu = static_cast<Vertex>(u);
        const int cls = c.class_of(uu);
        auto dist = bfs_distances(g, uu, spec.radius(cls));
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (dist[v] != DistanceMatrix::kUnreachable && c.class_of(static_cast<Vertex>(v)) == cls)
                result.violations.push_back({cls, uu, static_cast<Vertex>(v), dist[v]});
    }
    return result;
}

inline VerifyResult verify(const MultiGraph &g, const PackingColoring &c) { return verify(g, c.spec(), c); }

namespace detail {

class PackingSolver {
public:
    PackingSolver(const MultiGraph &g, const SPackingSpec &spec) : spec_(spec), n_(g.order()), r_(spec.classes()) {
        const auto dist = all_pairs_distances(g);
        // ball_[v][k]: vertices within the k-th distinct radius of v
        for (int rad : spec.radii())
            if (distinct_.empty() || distinct_.back() != rad)
                distinct_.push_back(rad);
        radius_slot_.resize(r_);
        for (std::size_t c = 0; c < r_; ++c)
            radius_slot_[c] = static_cast<std::size_t>(
                std::find(distinct_.begin(), distinct_.end(), spec.radius(static_cast<int>(c))) - distinct_.begin());
        ball_.assign(n_, std::vector<std::vector<Vertex>>(distinct_.size()));
        for (std::size_t v = 0; v < n_; ++v)
            for (std::size_t w = 0; w < n_; ++w) {
                if (v == w)
                    continue;
                int d = dist(static_cast<Vertex>(v), static_cast<Vertex>(w));
                for (std::size_t k = 0; k < distinct_.size(); ++k)
                    if (d != DistanceMatrix::kUnreachable && d <= distinct_[k])
                        ball_[v][k].push_back(static_cast<Vertex>(w));
            }
        // Classes sharing a radius are interchangeable; group_start_ marks the
        // first class of each such group.
        group_start_.resize(r_);
        for (std::size_t c = 0; c < r_; ++c)
            group_start_[c] = (c > 0 && spec.radius(static_cast<int>(c)) == spec.radius(static_cast<int>(c - 1)))
                                  ? group_start_[c - 1]
                                  : c;
        blocked_.assign(n_, std::vector<int>(r_, 0));
        saturation_.assign(n_, 0);
        cls_.assign(n_, PackingColoring::kUnassigned);
        used_.assign(r_, 0);
    }

    std::optional<PackingColoring> run() {
        if (!search(0))
            return std::nullopt;
        PackingColoring out(spec_, n_);
        for (std::size_t v = 0; v < n_; ++v)
            out.assign(static_cast<Vertex>(v), cls_[v]);
        return out;
    }

private:
    // A class may open only if it is the first of its radius group or its
    // predecessor in the group is already in use.
    bool symmetry_allows(std::size_t c) const { return c == group_start_[c] || used_[c - 1] > 0; }

    void place(Vertex v, std::size_t c, int delta) {
        used_[c] += delta;
        for (Vertex w : ball_[static_cast<std::size_t>(v)][radius_slot_[c]]) {
            auto &b = blocked_[static_cast<std::size_t>(w)][c];
            if (delta > 0 && b++ == 0)
                ++saturation_[static_cast<std::size_t>(w)];
            else if (delta < 0 && --b == 0)
                --saturation_[static_cast<std::size_t>(w)];
        }
    }

    bool search(std::size_t colored) {
        if (colored == n_)
            return true;
        // most saturated uncolored vertex, ties by smallest id
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v)
            if (cls_[v] == PackingColoring::kUnassigned && (best == n_ || saturation_[v] > saturation_[best]))
                best = v;
        if (static_cast<std::size_t>(saturation_[best]) == r_)
            return false;
        const Vertex v = static_cast<Vertex>(best);
        for (std::size_t c = 0; c < r_; ++c) {
            if (blocked_[best][c] || !symmetry_allows(c))
                continue;
            cls_[best] = static_cast<int>(c);
            place(v, c, +1);
            if (search(colored + 1))
                return true;
            place(v, c, -1);
            cls_[best] = PackingColoring::kUnassigned;
        }
        return false;
    }

    SPackingSpec spec_;
    std::size_t n_, r_;
    std::vector<int> distinct_;
    std::vector<std::size_t> radius_slot_, group_start_;
    std::vector<std::vector<std::vector<Vertex>>> ball_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> saturation_, cls_, used_;
};

} // namespace detail

/// Exact decision by backtracking: a valid S-packing coloring, or nullopt
/// when none exists. Refuses graphs above `cap` vertices.
inline std::optional<PackingColoring> solve_spacking(const MultiGraph &g, const SPackingSpec &spec,
                                                     std::size_t cap = 40) {
    if (g.order() > cap)
        fail(ErrorCode::CapExceeded, std::to_string(g.order()) + " vertices exceeds cap " + std::to_string(cap));
    return detail::PackingSolver(g, spec).run();
}

/// Every edge copy replaced by a path of length two through a new vertex;
/// the subdivision vertex of edge instance i is n + i.
inline MultiGraph subdivide(const MultiGraph &g) {
    const auto instances = g.edge_instances();
    const auto n = static_cast<Vertex>(g.order());
    std::vector<VertexPair> edges;
    edges.reserve(2 * instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Vertex mid = n + static_cast<Vertex>(i);
        edges.push_back({instances[i].u, mid});
        edges.push_back({mid, instances[i].v});
    }
    return MultiGraph(g.order() + instances.size(), edges);
}

} // namespace clawcolor

#endif
