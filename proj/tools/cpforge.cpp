// cpforge -- Casimir-Polder potentials and forces for atoms in planar
// magnetodielectric multilayers.  Scenario-driven: a config file declares
// materials, atoms, stacks, and scenarios; `run` executes one scenario and
// writes CSV or JSON.

#include <CLI11.hpp>
#include <iostream>

#include "cpforge/config.hpp"
#include "cpforge/scenario.hpp"

namespace {

int do_list(const std::string& config_path) {
    const auto ws = cpforge::scenario::load_file(config_path);
    for (const auto& name : cpforge::scenario::list_scenarios(ws))
        std::cout << name << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir-Polder potential and force calculator for planar "
                 "magnetodielectric multilayers"};
    app.require_subcommand(1);

    std::string config_path, scenario_name, out_path, format = "csv",
                             normalize = "dimensionless";
    double rel_tol = -1.0, eps_max = -1.0;
    bool allow_flags = false;
    int threads = 1;

    auto* run = app.add_subcommand("run", "run one scenario from a config file");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("scenario", scenario_name, "scenario name")->required();
    run->add_option("--rel-tol", rel_tol, "relative quadrature tolerance");
    run->add_option("--out", out_path, "output path");
    run->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--normalize", normalize, "si or dimensionless")
        ->check(CLI::IsMember({"si", "dimensionless"}));
    run->add_flag("--allow-flags", allow_flags,
                  "exit 0 even when a quadrature result is flagged");
    run->add_option("--threads", threads, "worker threads for curve sampling");
    run->add_option("--eps-max", eps_max, "override the border-scan upper eps(0)");

    auto* list = app.add_subcommand("list", "list the scenarios in a config file");
    list->add_option("config", config_path, "config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) return do_list(config_path);

        cpforge::scenario::Overrides overrides;
        if (rel_tol > 0.0) overrides.rel_tol = rel_tol;
        if (!out_path.empty()) overrides.out = out_path;
        overrides.format = format == "json" ? cpforge::scenario::Format::Json
                                            : cpforge::scenario::Format::Csv;
        overrides.normalize = normalize == "si"
                                  ? cpforge::scenario::Normalization::Si
                                  : cpforge::scenario::Normalization::Dimensionless;
        overrides.allow_flags = allow_flags;
        overrides.threads = threads;
        if (eps_max > 0.0) overrides.eps_max = eps_max;

        const auto ws = cpforge::scenario::load_file(config_path);
        const auto result = cpforge::scenario::run(ws, scenario_name, overrides);
        if (result.flagged)
            std::cerr << "warning: flagged quadrature results in " << result.artifact
                      << "\n";
        std::cout << result.artifact << "\n";
        return result.exit_code;
    } catch (const cpforge::config::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return cpforge::scenario::kExitConfig;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
