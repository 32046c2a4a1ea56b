#pragma once

#include <optional>
#include <string>

#include "junctionlab/keyvalue.hpp"

namespace junctionlab::cli {

inline constexpr const char* version = "0.1.0";

/// Exit-code contract, stable across versions:
///   0 success, 1 numerical/runtime failure, 2 usage/config/parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;

/// Simulates an IV curve from a config (junction, bias grid, temperature,
/// occupation mode, optional MAR block) and writes it as CSV, optionally
/// with an SVG rendering.
int run_simulate(const std::string& config_path, const std::string& out_csv,
                 const std::optional<std::string>& svg_path);

/// Fits measured data (IV or conductance; conductance is integrated first)
/// with the composite model and writes a report: text table plus a
/// machine-readable key = value block.
int run_fit(const std::string& data_path, const std::string& config_path,
            const std::string& out_report);

/// Temperature sweep of the quasiparticle-limited T1; writes
/// (T_mK, T1_us, gamma_per_s, i_fwd_nA, i_bwd_nA) rows.
int run_t1(const std::string& config_path, const std::string& out_csv);

/// Prints the effective bilayer gap (and the calibrated interface coupling
/// when a measured gap is given).
int run_proximity(const std::string& config_path);

/// Converts between IV and conductance representations of a trace.
int run_ingest(const std::string& data_path, const std::string& to_kind,
               const std::string& out_path);

/// Worker count for sweeps: hardware concurrency, capped by the
/// JUNCTIONLAB_THREADS environment variable when set.
int sweep_threads();

/// Reproducibility record written next to every output file.
KeyValueMap make_manifest(const std::string& subcommand, const KeyValueMap& config,
                          const std::vector<std::string>& input_paths);

/// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace junctionlab::cli
