#include "junctionlab/fitio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "junctionlab/errors.hpp"
#include "junctionlab/keyvalue.hpp"

namespace junctionlab::fitio {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(line);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

struct Column {
    std::string kind;  // "bias", "current", "didv"
    units::Unit unit;
};

/// Parses `bias_uV` / `current_nA` / `didv_uS` style column declarations.
std::optional<Column> parse_column_decl(const std::string& decl) {
    const auto us = decl.rfind('_');
    if (us == std::string::npos) return std::nullopt;
    const std::string kind = decl.substr(0, us);
    if (kind != "bias" && kind != "current" && kind != "didv") return std::nullopt;
    const auto unit = units::parse_unit(decl.substr(us + 1));
    if (!unit) {
        throw UnitError("unknown unit tag '" + decl.substr(us + 1) + "' in header column '" +
                        decl + "'");
    }
    return Column{kind, *unit};
}

}  // namespace

void TraceFile::validate() const {
    if (bias_column == signal_column) {
        throw ValidationError("TraceFile: bias and signal columns must be distinct");
    }
    if (bias_column < 0 || signal_column < 0) {
        throw ValidationError("TraceFile: column indices must be >= 0");
    }
    if (!(gain > 0.0)) throw ValidationError("TraceFile: gain must be > 0");
}

LoadedTrace parse_trace(const std::string& text, const TraceFile& file) {
    file.validate();

    std::optional<Column> bias_col;
    std::optional<Column> signal_col;

    std::vector<std::pair<double, double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    const int max_col = std::max(file.bias_column, file.signal_column);

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            // First comment that parses as column declarations is the header.
            if (!bias_col) {
                auto decls = split_csv(t.substr(1));
                std::optional<Column> b, s;
                for (const auto& d : decls) {
                    auto c = parse_column_decl(d);
                    if (!c) continue;
                    if (c->kind == "bias") {
                        b = *c;
                    } else {
                        s = *c;
                    }
                }
                if (b && s) {
                    bias_col = b;
                    signal_col = s;
                }
            }
            continue;
        }
        const auto fields = split_csv(t);
        if (static_cast<int>(fields.size()) <= max_col) {
            throw ParseError("line " + std::to_string(lineno) + ": expected at least " +
                             std::to_string(max_col + 1) + " columns, got " +
                             std::to_string(fields.size()));
        }
        auto parse_field = [&](int col) {
            const std::string& f = fields[static_cast<std::size_t>(col)];
            char* end = nullptr;
            const double v = std::strtod(f.c_str(), &end);
            if (end == f.c_str() || *end != '\0' || !std::isfinite(v)) {
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(col) + ": bad number '" + f + "'");
            }
            return v;
        };
        rows.emplace_back(parse_field(file.bias_column), parse_field(file.signal_column));
    }

    // Explicit tags on the TraceFile take precedence over the header.
    units::Unit bias_unit;
    if (file.bias_unit) {
        bias_unit = *file.bias_unit;
    } else if (bias_col) {
        bias_unit = bias_col->unit;
    } else {
        throw ParseError("missing unit header line '# bias_<unit>, <signal>_<unit>'");
    }
    units::Unit signal_unit;
    if (file.signal_unit) {
        signal_unit = *file.signal_unit;
    } else if (signal_col) {
        signal_unit = signal_col->unit;
    } else {
        throw ParseError("missing signal unit declaration");
    }
    const std::string kind = file.signal_kind.value_or(signal_col ? signal_col->kind : "");
    if (kind != "current" && kind != "didv") {
        throw ParseError("signal kind must be 'current' or 'didv', got '" + kind + "'");
    }
    if (rows.empty()) throw ParseError("no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // Average exact-duplicate bias rows.
    std::vector<double> bias, signal;
    bias.reserve(rows.size());
    signal.reserve(rows.size());
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < rows.size() && rows[j].first == rows[i].first) {
            sum += rows[j].second;
            ++j;
        }
        bias.push_back(rows[i].first);
        signal.push_back(sum / static_cast<double>(j - i));
        i = j;
    }

    const units::Unit bias_target = units::Unit::uV;
    for (double& v : bias) v = units::unit_convert(v, bias_unit, bias_target);
    const units::Unit signal_target =
        kind == "current" ? units::Unit::nA : units::Unit::uS;
    for (double& v : signal) v = units::unit_convert(v, signal_unit, signal_target) * file.gain;

    if (kind == "current") return IVCurve(std::move(bias), std::move(signal));
    return ConductanceCurve(std::move(bias), std::move(signal));
}

LoadedTrace load_trace(const TraceFile& file) {
    std::ifstream in(file.path);
    if (!in) throw ParseError("cannot open trace file: " + file.path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace(buf.str(), file);
}

IVCurve integrate_conductance(const ConductanceCurve& g, double anchor_v_uv, double anchor_i_na) {
    auto violations = validate_conductance(g);
    if (!violations.empty()) throw ValidationError("integrate_conductance: " + violations.front());
    if (g.bias_uv.empty()) throw TooFewSamples("integrate_conductance: empty curve");
    if (anchor_v_uv < g.bias_uv.front() || anchor_v_uv > g.bias_uv.back()) {
        throw AnchorOutOfRange("anchor bias " + std::to_string(anchor_v_uv) +
                               " uV outside trace range");
    }

    const std::size_t n = g.bias_uv.size();
    std::vector<double> cumulative(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double dv = g.bias_uv[i] - g.bias_uv[i - 1];
        // uS * uV = 1e-3 nA
        cumulative[i] = cumulative[i - 1] +
                        0.5 * (g.didv_us[i] + g.didv_us[i - 1]) * dv * 1e-3;
    }

    // Linear interpolation of the cumulative integral at the anchor bias.
    double at_anchor = cumulative.front();
    for (std::size_t i = 1; i < n; ++i) {
        if (anchor_v_uv <= g.bias_uv[i]) {
            const double frac =
                (anchor_v_uv - g.bias_uv[i - 1]) / (g.bias_uv[i] - g.bias_uv[i - 1]);
            at_anchor = cumulative[i - 1] + frac * (cumulative[i] - cumulative[i - 1]);
            break;
        }
    }
    const double shift = anchor_i_na - at_anchor;
    for (double& c : cumulative) c += shift;
    return IVCurve(g.bias_uv, std::move(cumulative), g.label);
}

ConductanceCurve differentiate_iv(const IVCurve& iv) {
    auto violations = validate_iv(iv);
    if (!violations.empty()) throw ValidationError("differentiate_iv: " + violations.front());
    const std::size_t n = iv.bias_uv.size();
    if (n < 3) throw TooFewSamples("differentiate_iv: need >= 3 samples, have " +
                                   std::to_string(n));

    std::vector<double> didv(n, 0.0);
    const auto& v = iv.bias_uv;
    const auto& c = iv.current_na;
    didv[0] = (c[1] - c[0]) / (v[1] - v[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        didv[i] = (c[i + 1] - c[i - 1]) / (v[i + 1] - v[i - 1]);
    }
    didv[n - 1] = (c[n - 1] - c[n - 2]) / (v[n - 1] - v[n - 2]);
    for (double& d : didv) d *= 1e3;  // nA/uV -> uS
    return ConductanceCurve(iv.bias_uv, std::move(didv), iv.label);
}

namespace {

std::string format_trace(const std::vector<double>& bias, const std::vector<double>& signal,
                         const char* header, const std::vector<std::string>& comments) {
    std::string out;
    out += header;
    out += '\n';
    for (const auto& c : comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    for (std::size_t i = 0; i < bias.size(); ++i) {
        out += format_double(bias[i]);
        out += ',';
        out += format_double(signal[i]);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << body;
}

}  // namespace

std::string format_iv(const IVCurve& iv, const std::vector<std::string>& comment_lines) {
    return format_trace(iv.bias_uv, iv.current_na, "# bias_uV, current_nA", comment_lines);
}

std::string format_conductance(const ConductanceCurve& g,
                               const std::vector<std::string>& comment_lines) {
    return format_trace(g.bias_uv, g.didv_us, "# bias_uV, didv_uS", comment_lines);
}

void save_iv(const std::string& path, const IVCurve& iv,
             const std::vector<std::string>& comment_lines) {
    write_file(path, format_iv(iv, comment_lines));
}

void save_conductance(const std::string& path, const ConductanceCurve& g,
                      const std::vector<std::string>& comment_lines) {
    write_file(path, format_conductance(g, comment_lines));
}

}  // namespace junctionlab::fitio
