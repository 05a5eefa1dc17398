#ifndef CLAWCOLOR_IO_HPP
#define CLAWCOLOR_IO_HPP

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clawcolor/graph.hpp"

namespace clawcolor {

enum class GraphFormat { EdgeList, Graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        lines.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

inline bool parse_int(std::string_view token, long long &out) {
    if (token.empty())
        return false;
    long long value = 0;
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
        value = value * 10 + (c - '0');
        if (value > (1LL << 40))
            return false;
    }
    out = value;
    return true;
}

inline std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] inline void malformed(std::size_t line_no, const std::string &why) {
    fail(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": " + why);
}

} // namespace detail

/// Edge-list text: first meaningful line is n, then one "u v" per line.
/// Repeated lines add multiplicity. Blank lines and '#' comments are skipped.
inline MultiGraph parse_edge_list(std::string_view text) {
    long long n = -1;
    std::vector<VertexPair> edges;
    std::size_t line_no = 0;
    for (auto raw : detail::split_lines(text)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto toks = detail::tokens(line);
        if (n < 0) {
            if (toks.size() != 1 || !detail::parse_int(toks[0], n))
                detail::malformed(line_no, "expected vertex count");
            continue;
        }
        long long a = 0, b = 0;
        if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b))
            detail::malformed(line_no, "expected \"u v\"");
        if (a >= n || b >= n)
            fail(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no));
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (n < 0)
        detail::malformed(line_no, "missing vertex count");
    return MultiGraph(static_cast<std::size_t>(n), edges);
}

inline std::string emit_edge_list(const MultiGraph &g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto &[u, v] : g.edge_instances())
        out << u << ' ' << v << '\n';
    return out.str();
}

/// graph6 for a single graph (one line, optional ">>graph6<<" header).
inline MultiGraph parse_graph6(std::string_view text) {
    auto line = detail::trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header)
        line.remove_prefix(header.size());
    std::vector<int> data;
    for (char c : line) {
        if (c < 63 || c > 126)
            detail::malformed(1, "graph6 byte out of range");
        data.push_back(c - 63);
    }
    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > data.size())
            detail::malformed(1, "truncated graph6 string");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | static_cast<std::uint64_t>(data[pos++]);
        return value;
    };
    std::uint64_t n = 0;
    if (data.empty())
        detail::malformed(1, "empty graph6 string");
    if (data[0] != 63) {
        n = take(1);
    } else if (data.size() > 1 && data[1] != 63) {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }
    const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
    if (data.size() - pos != byte_count)
        detail::malformed(1, "graph6 length does not match vertex count");
    std::vector<VertexPair> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            int chunk = data[pos + static_cast<std::size_t>(k / 6)];
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1)
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return MultiGraph(static_cast<std::size_t>(n), edges);
}

inline std::string emit_graph6(const MultiGraph &g) {
    if (!g.is_simple())
        fail(ErrorCode::Graph6Multiedge, "graph6 cannot encode parallel edges");
    const std::uint64_t n = g.order();
    std::string out;
    auto put = [&](std::uint64_t value, int chars) {
        for (int i = chars - 1; i >= 0; --i)
            out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        put(n, 6);
    }
    int chunk = 0;
    int filled = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

/// One graph per non-empty line.
inline std::vector<MultiGraph> parse_graph6_list(std::string_view text) {
    std::vector<MultiGraph> out;
    for (auto raw : detail::split_lines(text)) {
        auto line = detail::trim(raw);
        if (!line.empty())
            out.push_back(parse_graph6(line));
    }
    return out;
}

/// Guess the format: edge lists start with a bare integer line.
inline GraphFormat detect_format(std::string_view text) {
    for (auto raw : detail::split_lines(text)) {
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        long long n = 0;
        auto toks = detail::tokens(line);
        return (toks.size() == 1 && detail::parse_int(toks[0], n)) ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    return GraphFormat::EdgeList;
}

inline MultiGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string emit_graph(const MultiGraph &g, GraphFormat format) {
    return format == GraphFormat::EdgeList ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

} // namespace clawcolor

#endif
