#include "junctionlab/keyvalue.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "junctionlab/constants.hpp"
#include "junctionlab/errors.hpp"

namespace junctionlab {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

double parse_double_or_throw(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0') {
        throw ConfigError("key '" + key + "': not a number: '" + t + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

KeyValueMap KeyValueMap::parse(const std::string& text) {
    KeyValueMap kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                              t + "'");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        kv.entries_[key] = trim(t.substr(eq + 1));
    }
    return kv;
}

KeyValueMap KeyValueMap::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string KeyValueMap::serialize() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

void KeyValueMap::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << serialize();
}

bool KeyValueMap::has(const std::string& key) const { return entries_.count(key) != 0; }

void KeyValueMap::set(const std::string& key, const std::string& value) {
    entries_[key] = value;
}

void KeyValueMap::set(const std::string& key, double value) {
    entries_[key] = format_double(value);
}

void KeyValueMap::set(const std::string& key, bool value) {
    entries_[key] = value ? "true" : "false";
}

std::string KeyValueMap::get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing key '" + key + "'");
    return it->second;
}

double KeyValueMap::get_double(const std::string& key) const {
    return parse_double_or_throw(key, get_string(key));
}

bool KeyValueMap::get_bool(const std::string& key) const {
    const std::string v = get_string(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': not a boolean: '" + v + "'");
}

std::vector<double> KeyValueMap::get_double_list(const std::string& key) const {
    const std::string v = get_string(key);
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        out.push_back(parse_double_or_throw(key, t));
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

std::string KeyValueMap::get_string_or(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double KeyValueMap::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

bool KeyValueMap::get_bool_or(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}

std::vector<std::string> KeyValueMap::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    const std::string p = prefix + ".";
    for (const auto& [k, v] : entries_) {
        if (k.rfind(p, 0) == 0) out.push_back(k);
    }
    return out;
}

void write_electrode(KeyValueMap& kv, const std::string& prefix, const Electrode& e) {
    kv.set(prefix + ".gap0_ueV", e.gap0_uev);
    kv.set(prefix + ".dynes_ueV", e.dynes_uev);
    kv.set(prefix + ".n0_per_ueV_um3", e.n0_per_uev_um3);
    kv.set(prefix + ".thickness_nm", e.thickness_nm);
}

Electrode read_electrode(const KeyValueMap& kv, const std::string& prefix) {
    return Electrode(kv.get_double(prefix + ".gap0_ueV"),
                     kv.get_double_or(prefix + ".dynes_ueV", 0.0),
                     kv.get_double_or(prefix + ".n0_per_ueV_um3", 1.72e4),
                     kv.get_double_or(prefix + ".thickness_nm", 30.0));
}

void write_junction(KeyValueMap& kv, const std::string& prefix, const Junction& j) {
    write_electrode(kv, prefix + ".electrode1", j.electrode1);
    write_electrode(kv, prefix + ".electrode2", j.electrode2);
    kv.set(prefix + ".rn_kOhm", j.rn_kohm);
    kv.set(prefix + ".transparency", j.transparency);
}

Junction read_junction(const KeyValueMap& kv, const std::string& prefix) {
    return Junction(read_electrode(kv, prefix + ".electrode1"),
                    read_electrode(kv, prefix + ".electrode2"),
                    kv.get_double(prefix + ".rn_kOhm"),
                    kv.get_double_or(prefix + ".transparency", 0.0));
}

void write_qp_state(KeyValueMap& kv, const std::string& prefix, const QuasiparticleState& s) {
    kv.set(prefix + ".temperature_K", s.temperature_k);
    kv.set(prefix + ".n_neq_total_um3", s.n_neq_total_um3);
    kv.set(prefix + ".n1_um3", s.n1_um3);
    kv.set(prefix + ".n2_um3", s.n2_um3);
}

QuasiparticleState read_qp_state(const KeyValueMap& kv, const std::string& prefix) {
    return QuasiparticleState(kv.get_double(prefix + ".temperature_K"),
                              kv.get_double_or(prefix + ".n_neq_total_um3", 0.0),
                              kv.get_double_or(prefix + ".n1_um3", 0.0),
                              kv.get_double_or(prefix + ".n2_um3", 0.0));
}

void write_transmon(KeyValueMap& kv, const std::string& prefix, const TransmonParams& q) {
    kv.set(prefix + ".ec_ueV", q.ec_uev);
    kv.set(prefix + ".fge_GHz", q.fge_ghz);
}

TransmonParams read_transmon(const KeyValueMap& kv, const std::string& prefix) {
    double ec;
    const bool has_uev = kv.has(prefix + ".ec_ueV");
    const bool has_mhz = kv.has(prefix + ".ec_over_h_MHz");
    if (has_uev && has_mhz) {
        throw ConfigError("give either '" + prefix + ".ec_ueV' or '" + prefix +
                          ".ec_over_h_MHz', not both");
    }
    if (has_mhz) {
        ec = kv.get_double(prefix + ".ec_over_h_MHz") * 1e-3 * constants::h_uev_per_ghz;
    } else {
        ec = kv.get_double(prefix + ".ec_ueV");
    }
    return TransmonParams(ec, kv.get_double(prefix + ".fge_GHz"));
}

}  // namespace junctionlab
