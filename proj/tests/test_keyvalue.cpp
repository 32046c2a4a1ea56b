#include <doctest.h>

#include <random>

#include "junctionlab/errors.hpp"
#include "junctionlab/keyvalue.hpp"

using namespace junctionlab;

TEST_CASE("key = value text block round trips") {
    KeyValueMap kv;
    kv.set("junction.rn_kOhm", 18.6);
    kv.set("junction.electrode1.gap0_ueV", 190.0);
    kv.set("label", std::string("al_al"));
    kv.set("mar.enabled", true);

    const auto parsed = KeyValueMap::parse(kv.serialize());
    CHECK(parsed.get_double("junction.rn_kOhm") == 18.6);
    CHECK(parsed.get_double("junction.electrode1.gap0_ueV") == 190.0);
    CHECK(parsed.get_string("label") == "al_al");
    CHECK(parsed.get_bool("mar.enabled"));
}

TEST_CASE("parser accepts comments, blanks, and flexible spacing") {
    const auto kv = KeyValueMap::parse("# comment\n\n  a.b =  3.5 \nc=x y\n");
    CHECK(kv.get_double("a.b") == 3.5);
    CHECK(kv.get_string("c") == "x y");
    CHECK_THROWS_AS(KeyValueMap::parse("not a pair\n"), ConfigError);
    CHECK_THROWS_AS(kv.get_double("missing"), ConfigError);
    CHECK_THROWS_AS(kv.get_double("c"), ConfigError);
}

TEST_CASE("domain types survive serialization unchanged") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> gap(1.0, 300.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const Electrode e1(gap(rng), frac(rng), 1.72e4 * (0.5 + frac(rng)), 20.0 + gap(rng));
        const Electrode e2(gap(rng), frac(rng), 1.72e4, 50.0);
        const Junction j(e1, e2, 0.5 + gap(rng), frac(rng));

        KeyValueMap kv;
        write_junction(kv, "junction", j);
        const auto back = read_junction(KeyValueMap::parse(kv.serialize()), "junction");
        CHECK(back.electrode1.gap0_uev == j.electrode1.gap0_uev);
        CHECK(back.electrode1.dynes_uev == j.electrode1.dynes_uev);
        CHECK(back.electrode1.n0_per_uev_um3 == j.electrode1.n0_per_uev_um3);
        CHECK(back.electrode2.thickness_nm == j.electrode2.thickness_nm);
        CHECK(back.rn_kohm == j.rn_kohm);
        CHECK(back.transparency == j.transparency);
    }
}

TEST_CASE("transmon params accept ec as energy or frequency") {
    KeyValueMap kv;
    kv.set("transmon.ec_over_h_MHz", 250.0);
    kv.set("transmon.fge_GHz", 5.1);
    const auto q = read_transmon(kv, "transmon");
    CHECK(q.ec_uev == doctest::Approx(1.0339169242309647).epsilon(1e-12));

    KeyValueMap both;
    both.set("transmon.ec_ueV", 1.0);
    both.set("transmon.ec_over_h_MHz", 250.0);
    both.set("transmon.fge_GHz", 5.1);
    CHECK_THROWS_AS(read_transmon(both, "transmon"), ConfigError);
}
