#ifndef CLAWCOLOR_ISOMORPHISM_HPP
#define CLAWCOLOR_ISOMORPHISM_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "clawcolor/graph.hpp"

namespace clawcolor {

namespace detail {

// Sorted (degree, multiplicity profile) signature used to prune candidates.
inline std::vector<int> vertex_signature(const MultiGraph &g, Vertex v) {
    std::vector<int> sig{g.degree(v)};
    for (const auto &nb : g.neighbors(v))
        sig.push_back(nb.multiplicity * 16 + std::min(g.degree(nb.vertex), 15));
    std::sort(sig.begin() + 1, sig.end());
    return sig;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const MultiGraph &a, const MultiGraph &b) : a_(a), b_(b) {
        const std::size_t n = a.order();
        sig_a_.reserve(n);
        sig_b_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig_a_.push_back(vertex_signature(a, static_cast<Vertex>(v)));
            sig_b_.push_back(vertex_signature(b, static_cast<Vertex>(v)));
        }
        // Match vertices of `a` in BFS order so each new vertex usually has a
        // mapped neighbour, which keeps the candidate lists short.
        std::vector<char> seen(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            seen[s] = 1;
            std::size_t head = order_.size();
            order_.push_back(static_cast<Vertex>(s));
            while (head < order_.size()) {
                Vertex v = order_[head++];
                for (const auto &nb : a.neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                        seen[static_cast<std::size_t>(nb.vertex)] = 1;
                        order_.push_back(nb.vertex);
                    }
                }
            }
        }
        map_.assign(n, -1);
        used_.assign(n, 0);
    }

    std::optional<std::vector<Vertex>> run() {
        if (extend(0))
            return map_;
        return std::nullopt;
    }

private:
    bool consistent(Vertex va, Vertex vb, std::size_t depth) const {
        if (sig_a_[static_cast<std::size_t>(va)] != sig_b_[static_cast<std::size_t>(vb)])
            return false;
        for (std::size_t k = 0; k < depth; ++k) {
            Vertex wa = order_[k];
            Vertex wb = map_[static_cast<std::size_t>(wa)];
            if (a_.multiplicity(va, wa) != b_.multiplicity(vb, wb))
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size())
            return true;
        Vertex va = order_[depth];
        // Prefer images adjacent to the image of an already-mapped neighbour.
        std::vector<Vertex> candidates;
        for (const auto &nb : a_.neighbors(va)) {
            Vertex image = map_[static_cast<std::size_t>(nb.vertex)];
            if (image >= 0) {
                for (const auto &nbb : b_.neighbors(image))
                    candidates.push_back(nbb.vertex);
                break;
            }
        }
        if (candidates.empty())
            for (std::size_t v = 0; v < b_.order(); ++v)
                candidates.push_back(static_cast<Vertex>(v));
        for (Vertex vb : candidates) {
            if (used_[static_cast<std::size_t>(vb)] || !consistent(va, vb, depth))
                continue;
            map_[static_cast<std::size_t>(va)] = vb;
            used_[static_cast<std::size_t>(vb)] = 1;
            if (extend(depth + 1))
                return true;
            map_[static_cast<std::size_t>(va)] = -1;
            used_[static_cast<std::size_t>(vb)] = 0;
        }
        return false;
    }

    const MultiGraph &a_;
    const MultiGraph &b_;
    std::vector<std::vector<int>> sig_a_, sig_b_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

} // namespace detail

/// Vertex bijection a -> b preserving edge multiplicities, if one exists.
/// Plain backtracking; intended for graphs of a few dozen vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const MultiGraph &a, const MultiGraph &b) {
    if (a.order() != b.order() || a.size() != b.size() || a.edges().size() != b.edges().size())
        return std::nullopt;
    std::vector<int> da, db;
    for (std::size_t v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(static_cast<Vertex>(v)));
        db.push_back(b.degree(static_cast<Vertex>(v)));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return std::nullopt;
    return detail::IsomorphismSearch(a, b).run();
}

inline bool are_isomorphic(const MultiGraph &a, const MultiGraph &b) { return find_isomorphism(a, b).has_value(); }

} // namespace clawcolor

#endif
