#include "junctionlab/units.hpp"

#include <array>

#include "junctionlab/errors.hpp"

namespace junctionlab::units {

namespace {

struct UnitInfo {
    Unit unit;
    Dimension dim;
    int exp10;
    std::string_view name;
};

constexpr std::array<UnitInfo, 13> kUnits{{
    {Unit::uV, Dimension::voltage, 0, "uV"},
    {Unit::mV, Dimension::voltage, 3, "mV"},
    {Unit::V, Dimension::voltage, 6, "V"},
    {Unit::nA, Dimension::current, 0, "nA"},
    {Unit::uA, Dimension::current, 3, "uA"},
    {Unit::ueV, Dimension::energy, 0, "ueV"},
    {Unit::meV, Dimension::energy, 3, "meV"},
    {Unit::mK, Dimension::temperature, 0, "mK"},
    {Unit::K, Dimension::temperature, 3, "K"},
    {Unit::Ohm, Dimension::resistance, 0, "Ohm"},
    {Unit::kOhm, Dimension::resistance, 3, "kOhm"},
    {Unit::uS, Dimension::conductance, 0, "uS"},
    {Unit::S, Dimension::conductance, 6, "S"},
}};

const UnitInfo& info(Unit u) {
    for (const auto& i : kUnits) {
        if (i.unit == u) return i;
    }
    throw UnitError("unknown unit tag");
}

// Exact doubles for 10^0 .. 10^6.
constexpr std::array<double, 7> kPow10{1.0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6};

}  // namespace

Dimension dimension_of(Unit u) { return info(u).dim; }

int decimal_exponent(Unit u) { return info(u).exp10; }

std::string_view tag_name(Unit u) { return info(u).name; }

std::optional<Unit> parse_unit(std::string_view name) {
    for (const auto& i : kUnits) {
        if (i.name == name) return i.unit;
    }
    return std::nullopt;
}

double unit_convert(double value, Unit from, Unit to) {
    const UnitInfo& a = info(from);
    const UnitInfo& b = info(to);
    if (a.dim != b.dim) {
        throw DimensionMismatch(std::string("cannot convert ") + std::string(a.name) +
                                " to " + std::string(b.name));
    }
    const int n = a.exp10 - b.exp10;
    if (n == 0) return value;
    // Scale by the positive power so the factor itself is exact; the inverse
    // direction divides by the same exact factor.
    return n > 0 ? value * kPow10[static_cast<std::size_t>(n)]
                 : value / kPow10[static_cast<std::size_t>(-n)];
}

}  // namespace junctionlab::units
