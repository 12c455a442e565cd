#include <iostream>

#include <CLI11.hpp>

#include "selorder/cli/commands.hpp"

using namespace selorder::cli;

int main(int argc, char ** argv)
{
    CLI::App app{"Selectivity of ring-of-integers embeddings in maximal orders"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string json_path;
    app.add_option("--json", json_path, "write the machine-readable result to PATH");
    app.add_option("--seed", g.seed, "seed for the polynomial factorization");
    app.add_option("--bound", g.bound, "Frobenius scan bound");
    app.add_option("--window", g.window, "scan stabilization window")->check(CLI::PositiveNumber);

    int n = 0;
    std::string f;
    auto * local = app.add_subcommand("local", "embeddings of an unramified local extension");
    local->add_option("--n", n, "degree")->required()->check(CLI::Range(1, 64));
    local->add_option("--f", f, "inertia degrees, comma separated")->required();

    std::string m;
    auto * cg = app.add_subcommand("classgroup", "class group of Q(sqrt m)");
    cg->add_option("--m", m, "negative squarefree integer")->required()->allow_extra_args(false);

    std::string config;
    auto * selc = app.add_subcommand("selectivity", "full analysis from a config file");
    selc->add_option("config", config, "JSON config")->required();

    std::string vconfig;
    int n_max = 5;
    bool mutate = false;
    auto * ver = app.add_subcommand("verify", "exhaustive consistency suites");
    ver->add_option("config", vconfig, "optional config whose analysis is checked as well");
    ver->add_option("--n-max", n_max, "largest n for the local suites");
    ver->add_flag("--mutate", mutate, "corrupt the local criterion (negative control)");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }
    if (!json_path.empty())
        g.json = json_path;

    if (local->parsed())
        return cmd_local(n, f, g, std::cout, std::cerr);
    if (cg->parsed())
        return cmd_classgroup(m, g, std::cout, std::cerr);
    if (selc->parsed())
        return cmd_selectivity(config, g, std::cout, std::cerr);
    std::optional<std::filesystem::path> vc;
    if (!vconfig.empty())
        vc = vconfig;
    return cmd_verify(vc, n_max, mutate, g, std::cout, std::cerr);
}
