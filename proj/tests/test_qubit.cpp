#include <doctest.h>

#include <cmath>
#include <limits>

#include "junctionlab/constants.hpp"
#include "junctionlab/qubit.hpp"

using namespace junctionlab;
using tunneling::OccupationModel;

namespace {

Junction gap_pair(double gap1, double gap2, double rn = 8.5) {
    return Junction(Electrode(gap1, 0.0, 1.72e4, 30.0), Electrode(gap2, 0.0, 1.72e4, 50.0), rn,
                    0.0);
}

const TransmonParams kTransmon(1.0339169242309647, 5.1);  // E_C/h = 250 MHz

}  // namespace

TEST_CASE("qubit_bias_uv equals the photon energy") {
    CHECK(qubit::qubit_bias_uv(kTransmon) == doctest::Approx(21.091905254311679).epsilon(1e-12));
}

TEST_CASE("decay_rate_from_currents: frozen rate arithmetic") {
    // E_C/h = 250 MHz, f_ge = 5.1 GHz, I_fwd + I_bwd = 1 pA:
    // Gamma = (250/5100) * (1e-12 A / e), evaluated independently
    const auto r = qubit::decay_rate_from_currents(kTransmon, 1e-3, 0.0);
    CHECK(r.gamma_per_s == doctest::Approx(305956.32717944915).epsilon(1e-12));
    CHECK(r.t1_us == doctest::Approx(3.2684403333564).epsilon(1e-10));
    CHECK(r.t1_us * r.gamma_per_s == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("decay_rate_from_currents: linear in the summed current") {
    const auto base = qubit::decay_rate_from_currents(kTransmon, 0.7e-3, 0.3e-3);
    const auto twice = qubit::decay_rate_from_currents(kTransmon, 1.4e-3, 0.6e-3);
    CHECK(twice.gamma_per_s == doctest::Approx(2.0 * base.gamma_per_s).epsilon(1e-14));
    // and inversely proportional to f_ge at fixed currents and E_C
    const TransmonParams doubled_f(kTransmon.ec_uev, 2.0 * kTransmon.fge_ghz);
    const auto half = qubit::decay_rate_from_currents(doubled_f, 0.7e-3, 0.3e-3);
    CHECK(half.gamma_per_s == doctest::Approx(0.5 * base.gamma_per_s).epsilon(1e-14));
}

TEST_CASE("decay_rate_from_currents: zero current means no decay channel") {
    const auto r = qubit::decay_rate_from_currents(kTransmon, 0.0, 0.0);
    CHECK(r.gamma_per_s == 0.0);
    CHECK(std::isinf(r.t1_us));
    CHECK_FALSE(r.has_finite_t1());
}

TEST_CASE("qp_decay_rate: near-symmetric gaps at base temperature") {
    const Junction j = gap_pair(190.0, 180.0);  // |d1 - d2| = 10 ueV < h f_ge
    const QuasiparticleState state(0.02, 1.0, 0.0, 0.0);
    const auto r = qubit::qp_decay_rate(kTransmon, j, state, OccupationModel::Mode::noneq_density);
    CHECK(r.has_finite_t1());
    CHECK(r.i_fwd_na >= 0.0);
    CHECK(r.i_bwd_na >= 0.0);
    CHECK(r.i_fwd_na + r.i_bwd_na > 0.0);
}

TEST_CASE("qp_decay_rate: strong gap asymmetry protects the qubit") {
    const QuasiparticleState state(0.02, 1.0, 0.0, 0.0);
    const auto near_sym = qubit::qp_decay_rate(kTransmon, gap_pair(190.0, 180.0), state,
                                               OccupationModel::Mode::noneq_density);
    const auto asym = qubit::qp_decay_rate(kTransmon, gap_pair(190.0, 110.0), state,
                                           OccupationModel::Mode::noneq_density);
    CHECK(asym.t1_us > near_sym.t1_us);
}

TEST_CASE("t1_vs_temperature: near-symmetric sweep has an interior T1 maximum") {
    const Junction j = gap_pair(190.0, 180.0);
    std::vector<double> temps;
    for (double t = 0.02; t <= 0.201; t += 0.02) temps.push_back(t);
    const auto curve = qubit::t1_vs_temperature(kTransmon, j, 1.0, temps,
                                                OccupationModel::Mode::noneq_density, 2);
    REQUIRE(curve.size() == temps.size());
    std::size_t peak = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (curve[i].decay.t1_us > curve[peak].decay.t1_us) peak = i;
    }
    CHECK(peak > 0);
    CHECK(peak + 1 < curve.size());
}

TEST_CASE("t1_vs_temperature: thermal-only rate grows with temperature") {
    const Junction j = gap_pair(190.0, 180.0);
    std::vector<double> temps{0.05, 0.10, 0.20, 0.30};
    const auto curve =
        qubit::t1_vs_temperature(kTransmon, j, 0.0, temps, OccupationModel::Mode::thermal, 1);
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        CHECK(curve[i + 1].decay.gamma_per_s > curve[i].decay.gamma_per_s);
    }
}

TEST_CASE("t1_vs_temperature: deterministic and input-validated") {
    const Junction j = gap_pair(190.0, 180.0);
    const std::vector<double> temps{0.02, 0.1};
    const auto a = qubit::t1_vs_temperature(kTransmon, j, 1.0, temps);
    const auto b = qubit::t1_vs_temperature(kTransmon, j, 1.0, temps);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].decay.gamma_per_s == b[i].decay.gamma_per_s);
        CHECK(a[i].decay.t1_us == b[i].decay.t1_us);
    }
    CHECK_THROWS_AS(qubit::t1_vs_temperature(kTransmon, j, 1.0, {0.1, 0.05}), ValidationError);
    CHECK_THROWS_AS(qubit::t1_vs_temperature(kTransmon, j, 1.0, {-0.1, 0.05}), ValidationError);
}
