#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
    using namespace clawcolor::cli;
    CLI::App app{"(1,1,2,2)-packing colorings of claw-free cubic graphs"};
    app.require_subcommand(1);

    std::vector<std::string> color_paths;
    ColorOptions color_opt;
    auto *color = app.add_subcommand("color", "color graphs and verify the result");
    color->add_option("paths", color_paths, "input files, - for stdin")->required();
    color->add_option("--format", color_opt.format, "auto, el or g6")->capture_default_str();
    color->add_flag("--json", color_opt.json, "one JSON report per input");
    color->add_option("--jobs,-j", color_opt.jobs, "inputs colored in parallel")->capture_default_str();

    std::string solve_path, solve_format = "auto", solve_spec = "1,1,2,2";
    std::size_t cap = 40;
    bool solve_json = false;
    auto *solve = app.add_subcommand("solve", "exact S-packing coloring by backtracking");
    solve->add_option("path", solve_path)->required();
    solve->add_option("--format", solve_format)->capture_default_str();
    solve->add_option("--spec", solve_spec, "non-decreasing radii")->capture_default_str();
    solve->add_option("--cap", cap, "largest order accepted")->capture_default_str();
    solve->add_flag("--json", solve_json);

    std::string verify_graph, verify_coloring, verify_format = "auto", verify_spec = "1,1,2,2";
    auto *verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("coloring", verify_coloring, "\"vertex label\" lines or color --json output")->required();
    verify->add_option("--format", verify_format)->capture_default_str();
    verify->add_option("--spec", verify_spec)->capture_default_str();

    GenerateOptions gen;
    auto *generate = app.add_subcommand("generate", "write a generated graph as an edge list");
    generate->add_option("kind", gen.kind, "ring, cubic, expand, bridged or fixture")->required();
    generate->add_option("--k", gen.k, "ring: number of diamonds");
    generate->add_option("--n", gen.n, "cubic: order; expand: order of H");
    generate->add_option("--max-string", gen.max_string, "expand: longest diamond string per edge");
    generate->add_option("--tree", gen.tree, "bridged: components, e.g. K3:3,III:1,III:1,III:1");
    generate->add_option("--name", gen.name, "fixture: K4, Petersen, Fig1_H, Fig2_G, Fig3_G, prism");
    generate->add_option("--seed", gen.seed)->capture_default_str();
    generate->add_option("-o,--output", gen.output)->capture_default_str();
    generate->add_option("--format", gen.format, "el or g6")->capture_default_str();

    std::string decompose_path, decompose_format = "auto";
    auto *decompose = app.add_subcommand("decompose", "bridge tree and structure of a claw-free cubic graph");
    decompose->add_option("path", decompose_path)->required();
    decompose->add_option("--format", decompose_format)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kIo;
    }

    if (*color)
        return cmd_color(color_paths, color_opt, std::cout);
    if (*solve)
        return cmd_solve(solve_path, solve_format, solve_spec, cap, solve_json, std::cout, std::cerr);
    if (*verify)
        return cmd_verify(verify_graph, verify_coloring, verify_format, verify_spec, std::cout, std::cerr);
    if (*generate)
        return cmd_generate(gen, std::cout, std::cerr);
    if (*decompose)
        return cmd_decompose(decompose_path, decompose_format, std::cout, std::cerr);
    return kIo;
}
