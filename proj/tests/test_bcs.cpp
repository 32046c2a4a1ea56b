#include <doctest.h>

#include <cmath>

#include "junctionlab/bcs.hpp"
#include "junctionlab/constants.hpp"

using namespace junctionlab;
using bcs::DosProfile;

namespace {
const Electrode kAl(190.0, 0.0, 1.72e4, 30.0);
}

TEST_CASE("dos: sharp BCS limits") {
    const DosProfile sharp(190.0, 0.0);
    CHECK(bcs::dos(0.0, sharp) == 0.0);
    CHECK(bcs::dos(100.0, sharp) == 0.0);
    CHECK(bcs::dos(-189.999, sharp) == 0.0);
    // analytic E/sqrt(E^2 - Delta^2) at E = 2 Delta is 2/sqrt(3)
    CHECK(bcs::dos(380.0, sharp) == doctest::Approx(1.1547005383792515).epsilon(1e-14));
    CHECK(bcs::dos(-380.0, sharp) == doctest::Approx(1.1547005383792515).epsilon(1e-14));
}

TEST_CASE("dos: Dynes peak value at the gap edge") {
    // independently computed with an arbitrary-precision evaluation of
    // |Re[(E - i G)/sqrt((E - i G)^2 - Delta^2)]| at E = Delta = 190, G = 0.019
    const DosProfile dynes(190.0, 0.019);
    CHECK(bcs::dos(190.0, dynes) == doctest::Approx(50.003750078122266).epsilon(1e-12));
}

TEST_CASE("dos: even symmetry and high-energy limit") {
    const DosProfile p(190.0, 0.19);
    for (double e : {1.0, 57.3, 133.7, 189.9, 190.1, 244.0, 1000.0}) {
        CHECK(bcs::dos(e, p) == doctest::Approx(bcs::dos(-e, p)).epsilon(1e-14));
    }
    const DosProfile small_dynes(190.0, 0.019 * 0.1);
    CHECK(bcs::dos(20.0 * 190.0, small_dynes) == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(bcs::dos(0.0, DosProfile(0.0, 0.0)) == 1.0);  // gapless convention
    CHECK(bcs::dos(5.0, DosProfile(0.0, 1.0)) == 1.0);
}

TEST_CASE("fermi: symmetry, analytic point, deep tail") {
    CHECK(bcs::fermi(0.0, 0.02) == 0.5);
    CHECK(bcs::fermi(0.0, 4.0) == 0.5);
    // E = kB * 0.05 K at T = 0.05 K gives 1/(1 + e)
    const double e = constants::k_boltzmann_uev_per_k * 0.05;
    CHECK(bcs::fermi(e, 0.05) == doctest::Approx(0.2689414213699951).epsilon(1e-14));

    const double deep = bcs::fermi(190.0, 0.02);
    CHECK(deep < 1e-40);
    CHECK(deep >= 0.0);
    CHECK(std::isfinite(bcs::fermi(-1e9, 300.0)));
    CHECK(std::isfinite(bcs::fermi(1e9, 300.0)));
}

TEST_CASE("fermi: particle-hole sum rule") {
    for (double t : {0.02, 0.05, 0.14, 1.0}) {
        for (double e : {0.0, 0.3, 4.31, 55.0, 190.0, 401.0}) {
            const double x = e / (constants::k_boltzmann_uev_per_k * t);
            if (x > 700.0) continue;
            CHECK(bcs::fermi(e, t) + bcs::fermi(-e, t) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("log_fermi agrees with fermi where both are representable") {
    for (double e : {-50.0, -1.0, 0.0, 1.0, 50.0, 400.0}) {
        CHECK(std::exp(bcs::log_fermi(e, 0.05)) ==
              doctest::Approx(bcs::fermi(e, 0.05)).epsilon(1e-12));
    }
    // far past double underflow the log form keeps working
    CHECK(bcs::log_fermi(190.0, 0.002) == doctest::Approx(-190.0 / (constants::k_boltzmann_uev_per_k * 0.002)).epsilon(1e-9));
}

TEST_CASE("gap_at_temperature: endpoints and plateau") {
    CHECK(bcs::gap_at_temperature(190.0, 0.0) == 190.0);
    const double tc = bcs::tc_from_gap(190.0);
    CHECK(bcs::gap_at_temperature(190.0, tc) == 0.0);
    CHECK(bcs::gap_at_temperature(190.0, 2.0 * tc) == 0.0);
    // deep plateau: frozen from an independent high-precision evaluation
    CHECK(bcs::gap_at_temperature(190.0, 0.14) ==
          doctest::Approx(189.97889860865669).epsilon(1e-12));
    CHECK(bcs::gap_at_temperature(190.0, 0.14) > 0.995 * 190.0);
}

TEST_CASE("gap_at_temperature is non-increasing in T") {
    double prev = bcs::gap_at_temperature(190.0, 1e-6);
    for (double t = 0.02; t < 1.4; t += 0.02) {
        const double g = bcs::gap_at_temperature(190.0, t);
        CHECK(g <= prev + 1e-12);
        prev = g;
    }
}

TEST_CASE("tc_from_gap: value and linearity") {
    CHECK(bcs::tc_from_gap(190.0) == doctest::Approx(1.249919752321154).epsilon(1e-12));
    CHECK(bcs::tc_from_gap(380.0) == doctest::Approx(2.0 * bcs::tc_from_gap(190.0)).epsilon(1e-15));
    CHECK(bcs::tc_from_gap(1e-9) > 0.0);
}

TEST_CASE("thermal_qp_density: paper checkpoint and frozen value") {
    // below 50 mK aluminum should carry fewer than 1e-12 quasiparticles/um^3
    CHECK(bcs::thermal_qp_density(kAl, 0.05) < 1e-12);
    CHECK(bcs::thermal_qp_density(kAl, 0.05) ==
          doctest::Approx(1.7419713743601353e-13).epsilon(1e-10));
    CHECK(bcs::thermal_qp_density(kAl, 0.20) ==
          doctest::Approx(81.018743581430551).epsilon(1e-10));
}

TEST_CASE("thermal_qp_density: monotone in T and vanishing at low T") {
    double prev = 0.0;
    for (double t = 0.02; t <= bcs::tc_from_gap(190.0) / 2.0; t += 0.01) {
        const double n = bcs::thermal_qp_density(kAl, t);
        CHECK(n > prev);
        prev = n;
    }
    CHECK(bcs::thermal_qp_density(kAl, 0.004) < bcs::thermal_qp_density(kAl, 0.008));
    CHECK(bcs::thermal_qp_density(kAl, 0.004) >= 0.0);
}
