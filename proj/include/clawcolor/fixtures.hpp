#ifndef CLAWCOLOR_FIXTURES_HPP
#define CLAWCOLOR_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "clawcolor/coloring.hpp"
#include "clawcolor/graph.hpp"
#include "clawcolor/recognition.hpp"

namespace clawcolor::fixtures {

inline MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline MultiGraph petersen() {
    return MultiGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline MultiGraph prism() {
    return MultiGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Vertices 0-3 and 6-9 carry the two 4-cycles of the factor, 4-5 the digon.
inline MultiGraph fig1_h() {
    return MultiGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {6, 7}, {7, 8}, {8, 9}, {9, 6}, {4, 5}, {4, 5},
                           {1, 3}, {2, 4}, {5, 6}, {0, 8}, {7, 9}});
}

/// Matching edges of the fig1_h factor, as vertex pairs.
inline std::vector<VertexPair> fig1_matching() { return {{1, 3}, {2, 4}, {5, 6}, {0, 8}, {7, 9}}; }

/// H underlying fig2_g.
inline MultiGraph fig2_h() {
    return MultiGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 5}, {4, 5}, {4, 5}, {1, 3}, {2, 4}});
}

// Original figure labels 11..44 shifted down by 11.
inline MultiGraph fig2_g() {
    std::vector<VertexPair> e;
    auto add = [&](int a, int b) { e.push_back({a - 11, b - 11}); };
    for (int v = 11; v < 22; ++v)
        add(v, v + 1);
    add(22, 11);
    add(22, 12);
    add(13, 15);
    add(16, 18);
    add(19, 21);
    add(14, 20);
    add(17, 34);
    // string of two diamonds between 11 and 31
    add(11, 23);
    add(23, 24);
    add(23, 25);
    add(24, 25);
    add(24, 26);
    add(25, 26);
    add(26, 27);
    add(27, 28);
    add(27, 29);
    add(28, 29);
    add(28, 30);
    add(29, 30);
    add(30, 31);
    for (int v = 31; v < 44; ++v)
        add(v, v + 1);
    add(44, 31);
    add(32, 44);
    add(33, 35);
    add(36, 38);
    add(37, 39);
    add(40, 42);
    add(41, 43);
    return MultiGraph(34, e);
}

/// The coloring drawn for fig2_g, indexed like fig2_g.
inline PackingColoring fig2_coloring() {
    static const char *labels[] = {
        "2a", "1b", "1a", "2a", "1b", "1a", "2a", "1b", "1a", "2b", "1b", "1a", // 11-22
        "2b", "1a", "1b", "2a", "2b", "1a", "1b", "2a",                         // 23-30
        "2b", "1b", "1a", "2b", "1b", "1a", "2b", "2a", "1b", "1a", "2a", "2b", "1b", "1a", // 31-44
    };
    auto c = PackingColoring::one_one_two_two(34);
    const auto spec = SPackingSpec::one_one_two_two();
    for (Vertex v = 0; v < 34; ++v)
        c.assign(v, *PackingColoring::parse_label(spec, labels[v]));
    return c;
}

// 0-11 are the figure's numbered vertices 1-12; 12.. are a b c d r s f g t u p q.
inline MultiGraph fig3_g() {
    enum : Vertex { a = 12, b, c, d, r, s, f, g, t, u, p, q };
    return MultiGraph(24, {{0, 1}, {1, 2}, {0, 2},                                          // central K3
                           {2, 3}, {3, 4}, {3, 5}, {4, 5}, {a, p}, {a, q}, {p, q},          // first leaf
                           {5, b}, {4, a}, {b, p}, {b, q},                                  //
                           {0, 6}, {6, 7}, {6, 8}, {7, d}, {7, 8}, {8, c}, {c, g}, {c, f}, // second leaf
                           {f, g}, {d, f}, {d, g},                                          //
                           {1, 9}, {9, 10}, {9, 11}, {10, r}, {10, 11}, {11, s}, {s, t},    // third leaf
                           {s, u}, {r, t}, {r, u}, {t, u}});
}

/// All named fixtures, each checked for cubicity (and claw-freeness where
/// expected) on construction.
inline std::map<std::string, MultiGraph> all() {
    std::map<std::string, MultiGraph> out{
        {"K4", k4()},         {"Petersen", petersen()}, {"Fig1_H", fig1_h()},
        {"Fig2_G", fig2_g()}, {"Fig3_G", fig3_g()},     {"prism", prism()},
    };
    for (const auto &[name, g] : out) {
        if (!is_cubic(g))
            fail(ErrorCode::InternalInvariant, "fixture " + name + " is not cubic");
        if (name != "Petersen" && name != "Fig1_H" && !is_claw_free(g))
            fail(ErrorCode::InternalInvariant, "fixture " + name + " is not claw-free");
    }
    return out;
}

} // namespace clawcolor::fixtures

#endif
