#include <doctest.h>

#include <random>
#include <vector>

#include "junctionlab/errors.hpp"
#include "junctionlab/units.hpp"

using namespace junctionlab;
using units::Unit;
using units::unit_convert;

TEST_CASE("unit_convert scales by powers of ten") {
    CHECK(unit_convert(380.0, Unit::uV, Unit::mV) == doctest::Approx(0.38).epsilon(1e-15));
    CHECK(unit_convert(190.0, Unit::ueV, Unit::ueV) == 190.0);
    CHECK(unit_convert(18.6, Unit::kOhm, Unit::Ohm) == doctest::Approx(18600.0).epsilon(1e-15));
    CHECK(unit_convert(1.0, Unit::V, Unit::uV) == 1e6);
    CHECK(unit_convert(20.0, Unit::mK, Unit::K) == doctest::Approx(0.02).epsilon(1e-15));
}

TEST_CASE("unit_convert rejects dimension mismatches") {
    CHECK_THROWS_AS(unit_convert(1.0, Unit::uV, Unit::nA), DimensionMismatch);
    CHECK_THROWS_AS(unit_convert(1.0, Unit::K, Unit::ueV), DimensionMismatch);
    CHECK_THROWS_AS(unit_convert(1.0, Unit::uS, Unit::Ohm), DimensionMismatch);
}

TEST_CASE("unit_convert round trip is exact") {
    const std::vector<std::pair<Unit, Unit>> pairs = {
        {Unit::uV, Unit::mV},  {Unit::uV, Unit::V},   {Unit::nA, Unit::uA},
        {Unit::ueV, Unit::meV}, {Unit::mK, Unit::K},   {Unit::Ohm, Unit::kOhm},
        {Unit::uS, Unit::S},
    };
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> mantissa(-1000.0, 1000.0);
    for (const auto& [a, b] : pairs) {
        for (int i = 0; i < 20000; ++i) {
            const double x = mantissa(rng);
            CHECK(unit_convert(unit_convert(x, a, b), b, a) == x);
            CHECK(unit_convert(unit_convert(x, b, a), a, b) == x);
        }
    }
}

TEST_CASE("unit tags parse and print") {
    CHECK(units::parse_unit("uV") == Unit::uV);
    CHECK(units::parse_unit("kOhm") == Unit::kOhm);
    CHECK_FALSE(units::parse_unit("furlong").has_value());
    CHECK(units::tag_name(Unit::ueV) == "ueV");
}
