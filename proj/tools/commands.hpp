#ifndef CLAWCOLOR_TOOLS_COMMANDS_HPP
#define CLAWCOLOR_TOOLS_COMMANDS_HPP

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "clawcolor/clawcolor.hpp"

namespace clawcolor::cli {

using json = nlohmann::json;

enum Exit : int { kOk = 0, kIo = 1, kPrecondition = 2, kCap = 3, kInvalid = 4 };

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::LoopEdge:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::MalformedInput:
    case ErrorCode::Graph6Multiedge:
    case ErrorCode::PartialColoring: return kIo;
    case ErrorCode::CapExceeded: return kCap;
    case ErrorCode::VerificationFailed:
    case ErrorCode::InternalInvariant:
    case ErrorCode::ClaimViolated: return kInvalid;
    default: return kPrecondition;
    }
}

/// Thrown for unreadable files; maps to exit 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string &path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline GraphFormat resolve_format(const std::string &flag, std::string_view text) {
    if (flag == "el" || flag == "edgelist")
        return GraphFormat::EdgeList;
    if (flag == "g6" || flag == "graph6")
        return GraphFormat::Graph6;
    return detect_format(text);
}

/// Every graph in the input: one for an edge list, one per line for graph6.
inline std::vector<MultiGraph> load_graphs(const std::string &path, const std::string &format) {
    const auto text = read_input(path);
    if (resolve_format(format, text) == GraphFormat::Graph6) {
        auto graphs = parse_graph6_list(text);
        if (graphs.empty())
            throw Error(ErrorCode::MalformedInput, path + " holds no graphs");
        return graphs;
    }
    return {parse_edge_list(text)};
}

inline MultiGraph load_graph(const std::string &path, const std::string &format) {
    auto graphs = load_graphs(path, format);
    if (graphs.size() != 1)
        throw Error(ErrorCode::MalformedInput, path + " holds " + std::to_string(graphs.size()) + " graphs, expected 1");
    return graphs.front();
}

inline json coloring_json(const PackingColoring &c) {
    json labels = json::array();
    for (std::size_t v = 0; v < c.order(); ++v)
        labels.push_back(c.label_of(static_cast<Vertex>(v)));
    return labels;
}

inline void print_coloring(std::ostream &out, const PackingColoring &c) {
    for (std::size_t v = 0; v < c.order(); ++v)
        out << v << ' ' << c.label_of(static_cast<Vertex>(v)) << '\n';
}

struct ColorOptions {
    std::string format = "auto";
    bool json = false;
    int jobs = 1;
};

// Colors every graph in one input; returns the exit code and fills `out`.
inline int color_one(const std::string &path, const ColorOptions &opt, std::ostream &out) {
    json report;
    report["input"] = path;
    int code = kOk;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto graphs = load_graphs(path, opt.format);
        json results = json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto &g = graphs[i];
            auto c = color_claw_free_cubic(g);
            const bool ok = verify(g, c).ok();
            if (!ok)
                code = std::max<int>(code, kInvalid);
            if (opt.json) {
                results.push_back({{"vertices", g.order()},
                                   {"outcome", ok ? "colored" : "error"},
                                   {"spec", c.spec().to_string()},
                                   {"coloring", coloring_json(c)},
                                   {"verified", ok}});
            } else {
                if (graphs.size() > 1)
                    out << "# graph " << i << '\n';
                print_coloring(out, c);
                out << (ok ? "VERIFIED" : "VERIFICATION FAILED") << '\n';
            }
        }
        if (opt.json) {
            report["outcome"] = code == kOk ? "colored" : "error";
            if (results.size() == 1) {
                for (auto &[k, v] : results[0].items())
                    report[k] = v;
            } else {
                report["graphs"] = results;
            }
        }
    } catch (const IoError &e) {
        code = kIo;
        report["outcome"] = "error";
        report["error"] = e.what();
        if (!opt.json)
            out << "error: " << e.what() << '\n';
    } catch (const Error &e) {
        code = exit_code_for(e.code());
        report["outcome"] = "error";
        report["error"] = e.what();
        report["code"] = std::string(to_string(e.code()));
        if (!opt.json)
            out << "error: " << e.what() << '\n';
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.json) {
        report["time_ms"] = ms;
        out << report.dump() << '\n';
    }
    return code;
}

/// `color`: one report per input; with --jobs the inputs run in parallel and
/// reports are printed in input order.
inline int cmd_color(const std::vector<std::string> &paths, const ColorOptions &opt, std::ostream &out) {
    std::vector<std::ostringstream> buffers(paths.size());
    std::vector<int> codes(paths.size(), kOk);
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(opt.jobs, 1)), paths.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i)
            codes[i] = color_one(paths[i], opt, buffers[i]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < paths.size(); i += jobs)
                    codes[i] = color_one(paths[i], opt, buffers[i]);
            });
        for (auto &th : pool)
            th.join();
    }
    int code = kOk;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths.size() > 1 && !opt.json)
            out << "== " << paths[i] << '\n';
        out << buffers[i].str();
        code = std::max(code, codes[i]);
    }
    return code;
}

inline int report_error(std::ostream &err, const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
}

inline int cmd_solve(const std::string &path, const std::string &format, const std::string &spec_text,
                     std::size_t cap, bool as_json, std::ostream &out, std::ostream &err) {
    try {
        const auto g = load_graph(path, format);
        const auto spec = SPackingSpec::parse(spec_text);
        const auto start = std::chrono::steady_clock::now();
        const auto c = solve_spacking(g, spec, cap);
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (as_json) {
            json report{{"input", path}, {"spec", spec.to_string()}, {"outcome", c ? "colored" : "unsat"}, {"time_ms", ms}};
            if (c) {
                report["coloring"] = coloring_json(*c);
                report["verified"] = verify(g, *c).ok();
            }
            out << report.dump() << '\n';
        } else if (c) {
            out << "SAT\n";
            print_coloring(out, *c);
        } else {
            out << "UNSAT\n";
        }
        return kOk;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error &e) {
        return report_error(err, e);
    }
}

/// Reads "vertex label" lines, or the JSON written by `color --json` /
/// `solve --json` (a "coloring" array of labels, or an object keyed by vertex).
inline PackingColoring parse_coloring(std::string_view text, const SPackingSpec &spec, std::size_t n) {
    auto c = PackingColoring(spec, n);
    auto set = [&](long long v, const std::string &label) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " in coloring, graph has " + std::to_string(n));
        auto cls = PackingColoring::parse_label(spec, label);
        if (!cls)
            fail(ErrorCode::MalformedInput, "unknown label \"" + label + "\" for spec " + spec.to_string());
        c.assign(static_cast<Vertex>(v), *cls);
    };
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        json doc;
        try {
            doc = json::parse(body);
        } catch (const json::exception &e) {
            fail(ErrorCode::MalformedInput, std::string("coloring JSON: ") + e.what());
        }
        const json *col = doc.contains("coloring") ? &doc["coloring"] : &doc;
        if (col->is_array()) {
            for (std::size_t v = 0; v < col->size(); ++v)
                if ((*col)[v].is_string())
                    set(static_cast<long long>(v), (*col)[v].get<std::string>());
        } else if (col->is_object()) {
            for (auto &[k, val] : col->items()) {
                long long v = 0;
                if (!detail::parse_int(k, v) || !val.is_string())
                    fail(ErrorCode::MalformedInput, "bad coloring entry \"" + k + "\"");
                set(v, val.get<std::string>());
            }
        } else {
            fail(ErrorCode::MalformedInput, "coloring JSON has no coloring");
        }
        return c;
    }
    std::size_t line_no = 0;
    for (auto raw : detail::split_lines(text)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto toks = detail::tokens(line);
        long long v = 0;
        if (toks.size() != 2 || !detail::parse_int(toks[0], v))
            fail(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": expected \"vertex label\"");
        set(v, std::string(toks[1]));
    }
    return c;
}

inline int cmd_verify(const std::string &graph_path, const std::string &coloring_path, const std::string &format,
                      const std::string &spec_text, std::ostream &out, std::ostream &err) {
    try {
        const auto g = load_graph(graph_path, format);
        const auto spec = SPackingSpec::parse(spec_text);
        const auto c = parse_coloring(read_input(coloring_path), spec, g.order());
        const auto result = verify(g, spec, c);
        if (result.ok()) {
            out << "OK\n";
            return kOk;
        }
        for (const auto &v : result.violations)
            out << "violation class " << PackingColoring::class_label(spec, v.cls) << ": " << v.u << ' ' << v.v
                << " (distance " << v.distance << ")\n";
        return kInvalid;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error &e) {
        return report_error(err, e);
    }
}

struct GenerateOptions {
    std::string kind;
    int k = 2;                 // ring
    int n = 4;                 // cubic multigraph / H order for expand
    int max_string = 1;        // expand
    std::string tree;          // bridged
    std::string name;          // fixture
    std::uint64_t seed = 1;
    std::string output = "-";
    std::string format = "el";
};

inline MultiGraph generate(const GenerateOptions &opt) {
    if (opt.kind == "ring")
        return gen_ring_of_diamonds(opt.k);
    if (opt.kind == "cubic")
        return gen_cubic_multigraph(opt.n, opt.seed);
    if (opt.kind == "expand") {
        const auto h = gen_cubic_multigraph(opt.n, opt.seed);
        SplitMix64 rng(opt.seed ^ 0x5bd1e995ULL);
        ExpansionSpec spec{std::vector<int>(h.size(), 0), opt.seed};
        for (auto &len : spec.string_length)
            len = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_string) + 1));
        return expand_to_clawfree(h, spec);
    }
    if (opt.kind == "bridged")
        return gen_bridged(opt.tree, opt.seed).graph;
    if (opt.kind == "fixture") {
        const auto all = fixtures::all();
        auto it = all.find(opt.name);
        if (it == all.end())
            fail(ErrorCode::InvalidSpec, "unknown fixture \"" + opt.name + "\"");
        return it->second;
    }
    fail(ErrorCode::InvalidSpec, "unknown generator kind \"" + opt.kind + "\"");
}

inline int cmd_generate(const GenerateOptions &opt, std::ostream &out, std::ostream &err) {
    try {
        const auto g = generate(opt);
        const auto text = emit_graph(g, resolve_format(opt.format, "0"));
        if (opt.output == "-") {
            out << text;
        } else {
            std::ofstream file(opt.output, std::ios::binary);
            if (!file || !(file << text)) {
                err << "error: cannot write " << opt.output << '\n';
                return kIo;
            }
        }
        return kOk;
    } catch (const Error &e) {
        return report_error(err, e);
    }
}

/// "K_2", "K_{1,m}", "P_k" or a generic description.
inline std::string describe_tree(const MultiGraph &t) {
    const std::size_t k = t.order();
    if (k == 1)
        return "K_1";
    if (k == 2)
        return "K_2";
    std::size_t leaves = 0, max_degree = 0;
    for (std::size_t v = 0; v < k; ++v) {
        const auto d = static_cast<std::size_t>(t.degree(static_cast<Vertex>(v)));
        leaves += d == 1;
        max_degree = std::max(max_degree, d);
    }
    if (max_degree == k - 1)
        return "K_{1," + std::to_string(k - 1) + "}";
    if (leaves == 2)
        return "P_" + std::to_string(k);
    return "tree on " + std::to_string(k) + " nodes with " + std::to_string(leaves) + " leaves";
}

inline std::string describe_built(const OumDecomposition &dec) {
    std::size_t doubles = 0, triples = 0;
    for (const auto &e : dec.h.edges()) {
        doubles += e.multiplicity == 2;
        triples += e.multiplicity == 3;
    }
    std::string out = "Built: H = " + std::to_string(dec.h.order()) + " vertices";
    std::vector<std::string> notes;
    if (doubles)
        notes.push_back(std::to_string(doubles) + (doubles == 1 ? " double edge" : " double edges"));
    if (triples)
        notes.push_back(std::to_string(triples) + (triples == 1 ? " triple edge" : " triple edges"));
    if (!notes.empty()) {
        out += " (";
        for (std::size_t i = 0; i < notes.size(); ++i)
            out += (i ? ", " : "") + notes[i];
        out += ")";
    }
    std::vector<std::size_t> lengths;
    for (const auto &r : dec.realization)
        if (!r.string.empty())
            lengths.push_back(r.string.size());
    std::sort(lengths.rbegin(), lengths.rend());
    out += ", strings: ";
    if (lengths.empty())
        out += "none";
    else {
        out += "lengths ";
        for (std::size_t i = 0; i < lengths.size(); ++i)
            out += (i ? "," : "") + std::to_string(lengths[i]);
    }
    return out;
}

inline std::string describe_oum(const MultiGraph &g) {
    const auto dec = oum_decompose(g);
    switch (dec.kind) {
    case OumKind::K4: return "K4";
    case OumKind::RingOfDiamonds: return "RingOfDiamonds: " + std::to_string(dec.ring.size()) + " diamonds";
    case OumKind::Built: break;
    }
    return describe_built(dec);
}

inline std::string describe_components(const BridgeTree &tree) {
    std::map<ComponentKind, int> counts;
    for (const auto &c : tree.components)
        ++counts[c.kind];
    std::string out;
    for (auto kind : {ComponentKind::Triangle, ComponentKind::Diamond, ComponentKind::TypeIII}) {
        if (!counts[kind])
            continue;
        if (!out.empty())
            out += ", ";
        out += std::string(to_string(kind));
        if (counts[kind] > 1)
            out += "×" + std::to_string(counts[kind]);
    }
    return out;
}

inline int cmd_decompose(const std::string &path, const std::string &format, std::ostream &out, std::ostream &err) {
    try {
        const auto g = load_graph(path, format);
        detail::require_claw_free_cubic(g);
        if (bridge_pairs(g).empty()) {
            out << describe_oum(g) << '\n';
            const auto dec = oum_decompose(g);
            if (dec.kind == OumKind::Built)
                out << "H edges:\n" << emit_edge_list(dec.h);
            return kOk;
        }
        const auto tree = build_bridge_tree(g);
        out << "bridge tree " << describe_tree(tree.tree()) << "; components: " << describe_components(tree) << '\n';
        ColoringTrace trace;
        color_claw_free_cubic(g, &trace);
        for (const auto &step : trace.steps) {
            const auto &comp = tree.components[static_cast<std::size_t>(step.component)];
            out << "component " << step.component << ": " << to_string(comp.kind) << ", " << comp.vertices.size()
                << " vertices, " << comp.attachments.size() << " attachments";
            if (step.root)
                out << ", root";
            if (step.shape != TildeShape::None)
                out << ", reduced graph " << to_string(step.shape);
            out << '\n';
        }
        return kOk;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error &e) {
        return report_error(err, e);
    }
}

} // namespace clawcolor::cli

#endif
