// parbelos: verify the parbelos properties for given cusps, render figures,
// and tabulate quantities over a grid of division ratios.
//
//   parbelos verify --cusps 0 1 4 [--properties all|1,3,5] [--rel-tol R] [--seed N]
//   parbelos render <figure> --cusps 0 1 4 [-o figure-<figure>.svg]
//   parbelos sweep 0.1 0.25 0.05:0.95:19 [-o sweep.csv]
//
// Exit codes: 0 success, 1 a property failed, 2 invalid arguments,
// 3 output could not be written.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parbelos/figures.hpp"
#include "parbelos/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f << content;
    f.close();
    return static_cast<bool>(f);
}

std::string figure_list() {
    std::string s;
    for (const auto& [f, name] : parbelos::svg::figure_names) s += (s.empty() ? "" : ", ") + std::string(name);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parbelos and arbelos constructions, property checks and figures"};
    app.set_version_flag("--version", std::string(parbelos::tool_version));
    app.require_subcommand(1);

    std::vector<double> cusps;
    std::string properties = "all";
    double rel_tol = 1e-9;
    std::uint64_t seed = 0;
    std::string output;
    std::string figure_name;
    std::vector<std::string> grid;

    auto* verify = app.add_subcommand("verify", "Check properties 1-7 and print a JSON report");
    verify->add_option("--cusps", cusps, "Cusp abscissae X1 X2 X3")->expected(3)->required();
    verify->add_option("--properties", properties, "Comma-separated property numbers, or 'all'");
    verify->add_option("--rel-tol", rel_tol, "Relative tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Seed for the randomized tangent-triangle sample");

    auto* render = app.add_subcommand("render", "Write one figure as SVG");
    render->add_option("figure", figure_name, "Figure name: " + figure_list())->required();
    render->add_option("--cusps", cusps, "Cusp abscissae X1 X2 X3")->expected(3)->required();
    render->add_option("-o", output, "Output path (default figure-<name>.svg)");

    auto* sweep = app.add_subcommand("sweep", "Tabulate quantities of the parbelos with cusps (0, 4r, 4)");
    sweep->add_option("ratios", grid, "Ratios r in (0,1), or ranges lo:hi:count")->required();
    sweep->add_option("-o", output, "CSV output path (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            const auto selected = parbelos::parse_properties(properties);
            const auto doc = parbelos::run_verification({cusps[0], cusps[1], cusps[2]}, selected, rel_tol, seed);
            std::cout << parbelos::serialize(doc);
            return doc.all_pass() ? exit_ok : exit_failed;
        }
        if (render->parsed()) {
            const auto name = parbelos::svg::parse_figure_name(figure_name);
            if (!name) {
                std::cerr << "error: unknown figure '" << figure_name << "' (expected one of " << figure_list()
                          << ")\n";
                return exit_usage;
            }
            const auto svg = parbelos::svg::render_scene(parbelos::svg::figure(*name, cusps[0], cusps[1], cusps[2]));
            const std::string path = output.empty() ? "figure-" + figure_name + ".svg" : output;
            if (!write_file(path, svg)) {
                std::cerr << "error: cannot write " << path << "\n";
                return exit_io;
            }
            std::cout << path << "\n";
            return exit_ok;
        }
        if (sweep->parsed()) {
            const auto csv = parbelos::sweep_csv(parbelos::parse_ratio_grid(grid));
            if (output.empty()) {
                std::cout << csv;
                return exit_ok;
            }
            if (!write_file(output, csv)) {
                std::cerr << "error: cannot write " << output << "\n";
                return exit_io;
            }
            std::cout << output << "\n";
            return exit_ok;
        }
    } catch (const parbelos::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
