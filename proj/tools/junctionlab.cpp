#include <optional>
#include <string>

#include <CLI11.hpp>

#include "junctionlab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"junctionlab: superconducting tunnel junction IV simulation, "
                 "fitting, and quasiparticle T1 modeling"};
    app.set_version_flag("--version", junctionlab::cli::version);
    app.require_subcommand(1);

    std::string config_path, data_path, out_path, to_kind;
    std::optional<std::string> svg_path;

    auto* simulate = app.add_subcommand("simulate", "simulate an IV curve from a config");
    simulate->add_option("config", config_path, "key = value config file")->required();
    simulate->add_option("--out", out_path, "output CSV path")->required();
    std::string svg_buffer;
    auto* svg_opt = simulate->add_option("--svg", svg_buffer, "optional SVG plot path");

    auto* fit = app.add_subcommand("fit", "fit measured IV or dI/dV data");
    fit->add_option("data", data_path, "trace file (IV or conductance)")->required();
    fit->add_option("config", config_path, "fit config file")->required();
    fit->add_option("--out", out_path, "report output path")->required();

    auto* t1 = app.add_subcommand("t1", "temperature sweep of quasiparticle-limited T1");
    t1->add_option("config", config_path, "key = value config file")->required();
    t1->add_option("--out", out_path, "output CSV path")->required();

    auto* proximity = app.add_subcommand("proximity", "effective gap of a bilayer electrode");
    proximity->add_option("config", config_path, "key = value config file")->required();

    auto* ingest = app.add_subcommand("ingest", "convert between IV and conductance traces");
    ingest->add_option("data", data_path, "input trace file")->required();
    ingest->add_option("--to", to_kind, "target representation: iv | conductance")->required();
    ingest->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help/--version; anything else is usage.
        return code == 0 ? junctionlab::cli::exit_ok : junctionlab::cli::exit_usage;
    }

    if (svg_opt->count() > 0) svg_path = svg_buffer;

    if (simulate->parsed()) return junctionlab::cli::run_simulate(config_path, out_path, svg_path);
    if (fit->parsed()) return junctionlab::cli::run_fit(data_path, config_path, out_path);
    if (t1->parsed()) return junctionlab::cli::run_t1(config_path, out_path);
    if (proximity->parsed()) return junctionlab::cli::run_proximity(config_path);
    if (ingest->parsed()) return junctionlab::cli::run_ingest(data_path, to_kind, out_path);
    return junctionlab::cli::exit_usage;
}
