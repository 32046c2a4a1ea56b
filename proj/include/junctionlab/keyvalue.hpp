#pragma once

#include <map>
#include <string>
#include <vector>

#include "junctionlab/types.hpp"

namespace junctionlab {

/// Flat `key = value` text block with dotted paths for nesting. This is the
/// serialization used by configs, fit reports and manifests. Lines starting
/// with '#' and blank lines are ignored; keys are unique (last one wins on
/// parse, emission is sorted).
class KeyValueMap {
  public:
    KeyValueMap() = default;

    static KeyValueMap parse(const std::string& text);
    static KeyValueMap load_file(const std::string& path);

    std::string serialize() const;
    void save_file(const std::string& path) const;

    bool has(const std::string& key) const;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);  // 17 significant digits
    void set(const std::string& key, bool value);

    /// Throwing getters (ConfigError names the missing/bad key).
    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;  // comma separated

    /// Getters with defaults for optional keys.
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_double_or(const std::string& key, double fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;

    /// All keys beginning with `prefix.` (useful for nested blocks).
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

/// Formats a double with enough digits to round-trip bit exactly.
std::string format_double(double value);

// Serialization of the core domain types under a dotted prefix.
void write_electrode(KeyValueMap& kv, const std::string& prefix, const Electrode& e);
Electrode read_electrode(const KeyValueMap& kv, const std::string& prefix);

void write_junction(KeyValueMap& kv, const std::string& prefix, const Junction& j);
Junction read_junction(const KeyValueMap& kv, const std::string& prefix);

void write_qp_state(KeyValueMap& kv, const std::string& prefix, const QuasiparticleState& s);
QuasiparticleState read_qp_state(const KeyValueMap& kv, const std::string& prefix);

void write_transmon(KeyValueMap& kv, const std::string& prefix, const TransmonParams& q);
TransmonParams read_transmon(const KeyValueMap& kv, const std::string& prefix);

}  // namespace junctionlab
