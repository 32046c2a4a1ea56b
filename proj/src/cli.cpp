#include "junctionlab/cli.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "junctionlab/bcs.hpp"
#include "junctionlab/constants.hpp"
#include "junctionlab/errors.hpp"
#include "junctionlab/fitio.hpp"
#include "junctionlab/fitting.hpp"
#include "junctionlab/mar.hpp"
#include "junctionlab/proximity.hpp"
#include "junctionlab/qubit.hpp"
#include "junctionlab/random.hpp"
#include "junctionlab/svg.hpp"
#include "junctionlab/tunneling.hpp"
#include "junctionlab/units.hpp"

namespace junctionlab::cli {

namespace {

/// Maps an escaped exception to the exit-code contract. Config, parse and
/// range problems are usage errors (2); numerical and model failures are
/// runtime errors (1).
int classify_and_report(const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const UnitError*>(&e) || dynamic_cast<const ValidationError*>(&e) ||
        dynamic_cast<const OutOfRange*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
        dynamic_cast<const AnchorOutOfRange*>(&e)) {
        return exit_usage;
    }
    return exit_runtime;
}

double temperature_k_from_config(const KeyValueMap& cfg, const std::string& key_mk,
                                 double fallback_mk) {
    const double mk = cfg.get_double_or(key_mk, fallback_mk);
    return units::unit_convert(mk, units::Unit::mK, units::Unit::K);
}

std::vector<double> bias_grid(const KeyValueMap& cfg) {
    const double start = cfg.get_double("bias.start_uV");
    const double stop = cfg.get_double("bias.stop_uV");
    const double step = cfg.get_double("bias.step_uV");
    if (!(step > 0.0)) throw ConfigError("key 'bias.step_uV': must be > 0");
    if (!(stop > start)) {
        throw ConfigError("key 'bias.stop_uV': bias grid is empty (stop <= start)");
    }
    std::vector<double> grid;
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    grid.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
}

tunneling::OccupationModel occupation_from_config(const KeyValueMap& cfg, const Junction& j,
                                                  double temperature_k) {
    const std::string mode = cfg.get_string_or("occupation.mode", "thermal");
    if (mode == "thermal") return tunneling::OccupationModel::thermal_mode();
    if (mode != "noneq_density") {
        throw ConfigError("key 'occupation.mode': expected 'thermal' or 'noneq_density', got '" +
                          mode + "'");
    }
    const double n_total = cfg.get_double_or("occupation.n_neq_total_um3", 1.0);
    const auto [n1, n2] = tunneling::partition_nonequilibrium(j, n_total, temperature_k);
    return tunneling::OccupationModel::noneq(
        bcs::thermal_qp_density(j.electrode1, temperature_k) + n1,
        bcs::thermal_qp_density(j.electrode2, temperature_k) + n2);
}

std::optional<mar::MarParams> mar_from_config(const KeyValueMap& cfg, const Junction& j) {
    const bool enabled = cfg.get_bool_or("mar.enabled", j.transparency > 0.0);
    if (!enabled) return std::nullopt;
    return mar::MarParams(static_cast<int>(cfg.get_double_or("mar.n_max", 3)),
                          cfg.get_double_or("mar.step_width_uV", 4.0),
                          cfg.get_double_or("mar.base_scale_nA", 1.0));
}

std::string manifest_path_for(const std::string& out_path) { return out_path + ".manifest.txt"; }

void write_manifest_for(const std::string& subcommand, const KeyValueMap& config,
                        const std::vector<std::string>& inputs, const std::string& out_path) {
    make_manifest(subcommand, config, inputs).save_file(manifest_path_for(out_path));
}

fitting::FitConfig fit_config_from(const KeyValueMap& cfg) {
    fitting::FitConfig fc;
    const std::string objective = cfg.get_string_or("fit.objective", "current");
    if (objective == "current") {
        fc.objective = fitting::FitConfig::Objective::current_space;
    } else if (objective == "conductance") {
        fc.objective = fitting::FitConfig::Objective::conductance_space;
    } else {
        throw ConfigError("key 'fit.objective': expected 'current' or 'conductance'");
    }
    fc.max_evals = static_cast<long>(cfg.get_double_or("fit.max_evals", 3000));
    fc.seed = static_cast<unsigned>(cfg.get_double_or("fit.seed", 1));
    fc.restarts = static_cast<int>(cfg.get_double_or("fit.restarts", 3));
    fc.mar_n_max = static_cast<int>(cfg.get_double_or("fit.mar.n_max", 3));
    fc.mar_step_width_uv = cfg.get_double_or("fit.mar.step_width_uV", 4.0);
    fc.threads = sweep_threads();

    // Free parameter list; defaults mirror the usual workflow of extracting
    // the counter-electrode gap and resistance with the bottom gap pinned.
    const std::string free_list =
        cfg.get_string_or("fit.free", "delta2_ueV,rn_kOhm,transparency");
    std::istringstream in(free_list);
    std::string name;
    while (std::getline(in, name, ',')) {
        // trim
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) {
            name.erase(name.begin());
        }
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
            name.pop_back();
        }
        if (name.empty()) continue;
        auto id = fitting::parse_param(name);
        if (!id) throw ConfigError("key 'fit.free': unknown parameter '" + name + "'");
        fc.free_params.push_back(*id);
    }

    // Default bounds; overridable via fit.bounds.<param> = lo,hi.
    fc.bounds[fitting::ParamId::delta2] = {20.0, 280.0};
    fc.bounds[fitting::ParamId::rn] = {0.5, 50.0};
    fc.bounds[fitting::ParamId::transparency] = {0.0, 0.6};
    fc.bounds[fitting::ParamId::delta1] = {100.0, 280.0};
    fc.bounds[fitting::ParamId::dynes1] = {0.0, 5.0};
    fc.bounds[fitting::ParamId::dynes2] = {0.0, 5.0};
    fc.bounds[fitting::ParamId::temperature] = {0.005, 0.5};
    fc.bounds[fitting::ParamId::v_offset] = {-20.0, 20.0};
    fc.bounds[fitting::ParamId::i_offset] = {-5.0, 5.0};
    fc.bounds[fitting::ParamId::mar_base_scale] = {0.0, 200.0};

    for (const auto& key : cfg.keys_with_prefix("fit.bounds")) {
        const std::string pname = key.substr(std::string("fit.bounds.").size());
        auto id = fitting::parse_param(pname);
        if (!id) throw ConfigError("key '" + key + "': unknown parameter");
        const auto lohi = cfg.get_double_list(key);
        if (lohi.size() != 2) throw ConfigError("key '" + key + "': expected 'lo, hi'");
        fc.bounds[*id] = {lohi[0], lohi[1]};
    }

    fc.fixed[fitting::ParamId::delta1] = 190.0;
    fc.fixed[fitting::ParamId::temperature] =
        temperature_k_from_config(cfg, "fit.fixed.temperature_mK", 20.0);
    for (const auto& key : cfg.keys_with_prefix("fit.fixed")) {
        const std::string pname = key.substr(std::string("fit.fixed.").size());
        if (pname == "temperature_mK") continue;  // handled above, stored in K
        auto id = fitting::parse_param(pname);
        if (!id) throw ConfigError("key '" + key + "': unknown parameter");
        fc.fixed[*id] = cfg.get_double(key);
    }
    for (fitting::ParamId id : fc.free_params) fc.fixed.erase(id);
    return fc;
}

}  // namespace

int sweep_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("JUNCTIONLAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return std::min(hw, cap);
    }
    return hw;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "unreadable";
    std::uint64_t hash = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

KeyValueMap make_manifest(const std::string& subcommand, const KeyValueMap& config,
                          const std::vector<std::string>& input_paths) {
    KeyValueMap m;
    m.set("manifest.tool", std::string("junctionlab"));
    m.set("manifest.version", std::string(version));
    m.set("manifest.subcommand", subcommand);
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    m.set("manifest.timestamp_utc", std::string(stamp));
    for (const auto& [k, v] : config.entries()) m.set("config." + k, v);
    for (std::size_t i = 0; i < input_paths.size(); ++i) {
        m.set("input." + std::to_string(i) + ".path", input_paths[i]);
        m.set("input." + std::to_string(i) + ".fnv1a64", file_digest(input_paths[i]));
    }
    return m;
}

int run_simulate(const std::string& config_path, const std::string& out_csv,
                 const std::optional<std::string>& svg_path) {
    try {
        const KeyValueMap cfg = KeyValueMap::load_file(config_path);
        const Junction junction = read_junction(cfg, "junction");
        const double t_k = temperature_k_from_config(cfg, "temperature_mK", 20.0);
        const auto grid = bias_grid(cfg);
        const auto occ = occupation_from_config(cfg, junction, t_k);
        const auto mar_params = mar_from_config(cfg, junction);

        std::vector<double> current =
            tunneling::current_sweep(junction, grid, t_k, occ, sweep_threads());
        if (mar_params) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                current[i] += mar::mar_current(junction, grid[i], *mar_params);
            }
        }

        // Optional seeded measurement noise for fixture generation.
        const double noise_sigma = cfg.get_double_or("noise.sigma_nA", 0.0);
        if (noise_sigma > 0.0) {
            const auto seed = static_cast<unsigned>(cfg.get_double_or("noise.seed", 1));
            const auto noise = gaussian_noise(grid.size(), noise_sigma, seed);
            for (std::size_t i = 0; i < grid.size(); ++i) current[i] += noise[i];
        }

        IVCurve curve(grid, std::move(current), cfg.get_string_or("label", "simulated"));
        write_manifest_for("simulate", cfg, {config_path}, out_csv);
        fitio::save_iv(out_csv, curve,
                       {"generated by junctionlab simulate",
                        "manifest = " + manifest_path_for(out_csv)});

        if (svg_path) {
            svg::Series s;
            s.x = curve.bias_uv;
            s.y = curve.current_na;
            s.label = curve.label;
            svg::PlotSpec spec;
            spec.title = "Simulated IV";
            spec.x_label = "bias (uV)";
            spec.y_label = "current (nA)";
            svg::write_plot(*svg_path, {s}, spec);
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

int run_fit(const std::string& data_path, const std::string& config_path,
            const std::string& out_report) {
    try {
        const KeyValueMap cfg = KeyValueMap::load_file(config_path);
        const fitting::FitConfig fc = fit_config_from(cfg);

        fitio::TraceFile tf;
        tf.path = data_path;
        const auto loaded = fitio::load_trace(tf);
        // Conductance input is integrated to an IV first (anchor I(0) = 0).
        const IVCurve data = std::holds_alternative<IVCurve>(loaded)
                                 ? std::get<IVCurve>(loaded)
                                 : fitio::integrate_conductance(
                                       std::get<ConductanceCurve>(loaded), 0.0, 0.0);

        const fitting::FitResult result = fitting::fit_iv(data, fc);

        std::ostringstream report;
        report << fitting::report_table({result}, {data.label.empty() ? data_path : data.label},
                                        result.params.at(fitting::ParamId::delta1));
        report << '\n';
        KeyValueMap out_kv;
        for (const auto& [id, v] : result.params) {
            out_kv.set(std::string("fit.param.") + fitting::param_name(id), v);
        }
        for (const auto& [id, v] : result.sensitivity) {
            out_kv.set(std::string("fit.sensitivity.") + fitting::param_name(id), v);
        }
        out_kv.set("fit.rms", result.rms);
        out_kv.set("fit.evaluations", static_cast<double>(result.evaluations));
        out_kv.set("fit.converged", result.converged);
        out_kv.set("fit.objective", cfg.get_string_or("fit.objective", "current"));
        report << out_kv.serialize();
        report << "manifest = " << manifest_path_for(out_report) << '\n';

        write_manifest_for("fit", cfg, {data_path, config_path}, out_report);
        std::ofstream out(out_report);
        if (!out) throw ConfigError("cannot write report: " + out_report);
        out << report.str();
        std::cout << report.str();

        if (!result.converged) {
            std::cerr << "fit did not converge within fit.max_evals = " << fc.max_evals
                      << " (best rms " << result.rms << "); report written anyway\n";
            return exit_runtime;
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

int run_t1(const std::string& config_path, const std::string& out_csv) {
    try {
        const KeyValueMap cfg = KeyValueMap::load_file(config_path);
        const TransmonParams q = read_transmon(cfg, "transmon");
        const Junction junction = read_junction(cfg, "junction");
        const double n_neq = cfg.get_double_or("n_neq_total_um3", 1.0);
        const std::string mode_name = cfg.get_string_or("occupation.mode", "noneq_density");
        tunneling::OccupationModel::Mode mode;
        if (mode_name == "thermal") {
            mode = tunneling::OccupationModel::Mode::thermal;
        } else if (mode_name == "noneq_density") {
            mode = tunneling::OccupationModel::Mode::noneq_density;
        } else {
            throw ConfigError("key 'occupation.mode': expected 'thermal' or 'noneq_density'");
        }

        const auto list_mk = cfg.get_double_list("temperatures_mK");
        std::vector<double> temps_k;
        temps_k.reserve(list_mk.size());
        for (double mk : list_mk) {
            temps_k.push_back(units::unit_convert(mk, units::Unit::mK, units::Unit::K));
        }

        const auto points =
            qubit::t1_vs_temperature(q, junction, n_neq, temps_k, mode, sweep_threads());

        write_manifest_for("t1", cfg, {config_path}, out_csv);
        std::ofstream out(out_csv);
        if (!out) throw ConfigError("cannot write output: " + out_csv);
        out << "# T_mK, T1_us, gamma_per_s, i_fwd_nA, i_bwd_nA\n";
        out << "# manifest = " << manifest_path_for(out_csv) << '\n';
        for (const auto& p : points) {
            out << format_double(units::unit_convert(p.temperature_k, units::Unit::K,
                                                     units::Unit::mK))
                << ',' << format_double(p.decay.t1_us) << ',' << format_double(p.decay.gamma_per_s)
                << ',' << format_double(p.decay.i_fwd_na) << ','
                << format_double(p.decay.i_bwd_na) << '\n';
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

int run_proximity(const std::string& config_path) {
    try {
        const KeyValueMap cfg = KeyValueMap::load_file(config_path);
        proximity::BilayerSpec spec(read_electrode(cfg, "bilayer.layer_a"),
                                    read_electrode(cfg, "bilayer.layer_b"),
                                    cfg.get_double_or("bilayer.coupling", 1.0));
        const double gap = proximity::cooper_limit_gap(spec);
        std::cout << "effective_gap_ueV = " << format_double(gap) << '\n';
        if (cfg.has("calibrate.measured_gap_ueV")) {
            const double measured = cfg.get_double("calibrate.measured_gap_ueV");
            const double tau = proximity::calibrate_coupling(spec, measured);
            std::cout << "calibrated_coupling = " << format_double(tau) << '\n';
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

int run_ingest(const std::string& data_path, const std::string& to_kind,
               const std::string& out_path) {
    try {
        if (to_kind != "iv" && to_kind != "conductance") {
            throw ConfigError("--to must be 'iv' or 'conductance', got '" + to_kind + "'");
        }
        fitio::TraceFile tf;
        tf.path = data_path;
        const auto loaded = fitio::load_trace(tf);

        KeyValueMap pseudo_cfg;
        pseudo_cfg.set("ingest.to", to_kind);
        write_manifest_for("ingest", pseudo_cfg, {data_path}, out_path);
        const std::vector<std::string> comments{"converted by junctionlab ingest",
                                                "manifest = " + manifest_path_for(out_path)};

        if (to_kind == "iv") {
            const IVCurve iv = std::holds_alternative<IVCurve>(loaded)
                                   ? std::get<IVCurve>(loaded)
                                   : fitio::integrate_conductance(
                                         std::get<ConductanceCurve>(loaded), 0.0, 0.0);
            fitio::save_iv(out_path, iv, comments);
        } else {
            const ConductanceCurve g =
                std::holds_alternative<ConductanceCurve>(loaded)
                    ? std::get<ConductanceCurve>(loaded)
                    : fitio::differentiate_iv(std::get<IVCurve>(loaded));
            fitio::save_conductance(out_path, g, comments);
        }
        return exit_ok;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

}  // namespace junctionlab::cli
