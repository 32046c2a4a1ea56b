#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace junctionlab::units {

/// Fixed set of supported unit tags. This is deliberately not a general
/// units library; every tag maps to (dimension, decimal exponent) and
/// conversion is an exact power-of-ten scaling.
enum class Unit {
    uV,
    mV,
    V,
    nA,
    uA,
    ueV,
    meV,
    K,
    mK,
    kOhm,
    Ohm,
    uS,
    S,
};

enum class Dimension {
    voltage,
    current,
    energy,
    temperature,
    resistance,
    conductance,
};

Dimension dimension_of(Unit u);

/// Decimal exponent of the tag relative to the smallest tag of its dimension
/// (uV = 0, mV = 3, V = 6, ...).
int decimal_exponent(Unit u);

/// ASCII spelling used in file headers and configs ("uV", "kOhm", ...).
std::string_view tag_name(Unit u);

/// Inverse of tag_name; empty result for unknown tags.
std::optional<Unit> parse_unit(std::string_view name);

/// Exact power-of-ten rescaling between tags of the same dimension.
/// Throws DimensionMismatch when the dimensions differ.
double unit_convert(double value, Unit from, Unit to);

}  // namespace junctionlab::units
