#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "junctionlab/types.hpp"
#include "junctionlab/units.hpp"

namespace junctionlab::fitio {

/// Description of a measurement trace on disk. Files are comma-separated
/// UTF-8 text with `#` comment lines; the header comment
///   # bias_<unit>, <signal>_<unit>
/// declares the columns (signal is `current` or `didv`). Explicit unit tags
/// here override the header for files that lack one.
struct TraceFile {
    std::string path;
    int bias_column = 0;
    int signal_column = 1;
    std::optional<units::Unit> bias_unit;
    std::optional<units::Unit> signal_unit;
    std::optional<std::string> signal_kind;  // "current" or "didv"
    double gain = 1.0;

    void validate() const;
};

using LoadedTrace = std::variant<IVCurve, ConductanceCurve>;

/// Reads a trace, normalizes units to the internal convention (uV, nA, uS),
/// sorts rows by bias and averages exact-duplicate bias rows.
LoadedTrace load_trace(const TraceFile& file);

/// Same, parsing from an in-memory string (the file body).
LoadedTrace parse_trace(const std::string& text, const TraceFile& file);

/// Cumulative trapezoidal integral of dI/dV over V, shifted so that
/// I(anchor_v) = anchor_i. The anchor bias must lie inside the bias range.
IVCurve integrate_conductance(const ConductanceCurve& g, double anchor_v_uv = 0.0,
                              double anchor_i_na = 0.0);

/// Central differences on interior points, one-sided at the endpoints.
ConductanceCurve differentiate_iv(const IVCurve& iv);

/// Writers for the same format (17 significant digits, unit header first).
void save_iv(const std::string& path, const IVCurve& iv,
             const std::vector<std::string>& comment_lines = {});
void save_conductance(const std::string& path, const ConductanceCurve& g,
                      const std::vector<std::string>& comment_lines = {});

std::string format_iv(const IVCurve& iv, const std::vector<std::string>& comment_lines = {});
std::string format_conductance(const ConductanceCurve& g,
                               const std::vector<std::string>& comment_lines = {});

}  // namespace junctionlab::fitio
