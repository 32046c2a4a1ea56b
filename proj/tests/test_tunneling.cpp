#include <doctest.h>

#include <cmath>

#include "junctionlab/bcs.hpp"
#include "junctionlab/constants.hpp"
#include "junctionlab/errors.hpp"
#include "junctionlab/fitio.hpp"
#include "junctionlab/tunneling.hpp"
#include "oracles.hpp"

using namespace junctionlab;
using tunneling::OccupationModel;
using tunneling::TunnelContext;

namespace {

Junction symmetric_junction(double dynes = 0.019) {
    const Electrode e(190.0, dynes, 1.72e4, 30.0);
    return Junction(e, e, 18.6, 0.0);
}

Junction al_ti_junction(double dynes1 = 1.9, double dynes2 = 1.1) {
    return Junction(Electrode(190.0, dynes1, 1.72e4, 30.0),
                    Electrode(110.0, dynes2, 1.72e4, 50.0), 8.5, 0.0);
}

}  // namespace

TEST_CASE("qp_current: hard gap carries no current") {
    const Junction j = symmetric_junction(0.0);  // Dynes floor applies
    const double i = tunneling::qp_current(j, 0.5 * 380.0, 0.02, OccupationModel::thermal_mode());
    CHECK(std::abs(i) < 1e-3);
}

TEST_CASE("qp_current: high-bias value matches the brute-force Riemann oracle") {
    // Dynes chosen well above the floor so the 1e6-point fixed grid resolves
    // the coherence peaks.
    const Junction j = symmetric_junction(1.9);
    const oracle::JunctionSpec spec{190.0, 190.0, 1.9, 1.9, 18.6};
    const double v = 1.5 * 380.0;
    const double impl = tunneling::qp_current(j, v, 0.02, OccupationModel::thermal_mode());
    const double ref = oracle::qp_current_riemann(spec, v, 0.02, 1000000);
    CHECK(impl == doctest::Approx(ref).epsilon(1e-4));
    // still approaching the ohmic line from below at this bias
    CHECK(impl < v / 18.6);
    CHECK(impl > 0.8 * v / 18.6);
}

TEST_CASE("qp_current: ohmic asymptote above four gap sums") {
    const Junction j = symmetric_junction();
    for (double mult : {4.0, 6.0}) {
        const double v = mult * 380.0;
        const double i = tunneling::qp_current(j, v, 0.02, OccupationModel::thermal_mode());
        CHECK(std::abs(i - v / 18.6) / (v / 18.6) < 0.03);
    }
}

TEST_CASE("qp_current: antisymmetric in V") {
    const Junction j = al_ti_junction();
    for (double v : {120.0, 290.0, 310.0, 500.0}) {
        const double ip = tunneling::qp_current(j, v, 0.05, OccupationModel::thermal_mode());
        const double im = tunneling::qp_current(j, -v, 0.05, OccupationModel::thermal_mode());
        CHECK(ip == doctest::Approx(-im).epsilon(1e-5));
    }
}

TEST_CASE("qp_current: conductance peaks at the gap sum") {
    const Junction j = symmetric_junction();
    std::vector<double> bias, current;
    for (double v = 330.0; v <= 430.0; v += 0.5) bias.push_back(v);
    for (double v : bias) {
        current.push_back(tunneling::qp_current(j, v, 0.02, OccupationModel::thermal_mode()));
    }
    const auto g = fitio::differentiate_iv(IVCurve(bias, current));
    std::size_t peak = 0;
    for (std::size_t i = 0; i < g.didv_us.size(); ++i) {
        if (g.didv_us[i] > g.didv_us[peak]) peak = i;
    }
    CHECK(std::abs(g.bias_uv[peak] - 380.0) <= 1.0);
}

TEST_CASE("qp_current: thermal activation never reduces subgap transport") {
    const Junction j = symmetric_junction();
    const double v = 250.0;
    double prev = -1.0;
    for (double t : {0.02, 0.1, 0.2, 0.3}) {
        const auto d = tunneling::directional_currents(j, v, t, OccupationModel::thermal_mode());
        const double total = d.forward_na + d.backward_na;
        CHECK(total >= prev);
        prev = total;
    }
}

TEST_CASE("directional: detailed balance at zero bias") {
    const Junction j = symmetric_junction();
    const auto d = tunneling::directional_currents(j, 0.0, 0.1, OccupationModel::thermal_mode());
    CHECK(d.forward_na == doctest::Approx(d.backward_na).epsilon(1e-9));
    CHECK(d.forward_na >= 0.0);
}

TEST_CASE("directional: decomposition identity and non-negativity") {
    const Junction j = al_ti_junction();
    for (double v : {21.1, 150.0, 310.0, 700.0}) {
        for (double t : {0.02, 0.14}) {
            const auto d = tunneling::directional_currents(j, v, t, OccupationModel::thermal_mode());
            const double net = tunneling::qp_current(j, v, t, OccupationModel::thermal_mode());
            CHECK(d.forward_na >= 0.0);
            CHECK(d.backward_na >= 0.0);
            const double scale =
                std::max({std::abs(net), d.forward_na + d.backward_na, 1e-9});
            CHECK(std::abs(d.forward_na - d.backward_na - net) / scale < 1e-5);
        }
    }
}

TEST_CASE("directional: agrees with the Riemann oracle above the gap") {
    const Junction j = al_ti_junction();
    const oracle::JunctionSpec spec{190.0, 110.0, 1.9, 1.1, 8.5};
    const double v = 450.0;
    const auto impl = tunneling::directional_currents(j, v, 0.05, OccupationModel::thermal_mode());
    const auto ref = oracle::directional_riemann(spec, v, 0.05, 1000000);
    CHECK(impl.forward_na == doctest::Approx(ref.forward_na).epsilon(1e-4));
    CHECK(impl.backward_na == doctest::Approx(ref.backward_na).epsilon(2e-3));
}

TEST_CASE("directional: nonequilibrium density in the low-gap electrode conducts at h f_ge") {
    const Junction j = al_ti_junction();
    const double v = constants::h_uev_per_ghz * 5.1;  // ~21.1 uV
    const auto occ = OccupationModel::noneq(0.0, 1.0);
    const auto d = tunneling::directional_currents(j, v, 0.02, occ);
    CHECK(d.forward_na + d.backward_na > 0.0);
    CHECK(d.forward_na >= 0.0);
    CHECK(d.backward_na >= 0.0);
}

TEST_CASE("partition_nonequilibrium: symmetry, conservation, low-T collapse") {
    const Junction sym = symmetric_junction();
    const auto [s1, s2] = tunneling::partition_nonequilibrium(sym, 2.0, 0.05);
    CHECK(s1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s1 + s2 == 2.0);

    const Junction asym = al_ti_junction();
    const auto [a1, a2] = tunneling::partition_nonequilibrium(asym, 1.0, 0.02);
    CHECK(a2 / 1.0 > 1.0 - 1e-6);  // weight ratio ~ exp(-(190-110)/kB T) ~ e^-46
    CHECK(a1 + a2 == 1.0);
    CHECK(a1 >= 0.0);

    const auto [z1, z2] = tunneling::partition_nonequilibrium(asym, 0.0, 0.02);
    CHECK(z1 == 0.0);
    CHECK(z2 == 0.0);
}

TEST_CASE("partition_nonequilibrium: continuous in T") {
    const Junction j = al_ti_junction();
    double prev = tunneling::partition_nonequilibrium(j, 1.0, 0.010).first;
    for (double t = 0.012; t <= 0.4; t += 0.002) {
        const double n1 = tunneling::partition_nonequilibrium(j, 1.0, t).first;
        CHECK(std::abs(n1 - prev) < 0.05);  // no jumps on a fine grid
        prev = n1;
    }
}

TEST_CASE("occupation_at: thermal mode is exactly fermi") {
    const Junction j = al_ti_junction();
    for (double e : {-250.0, -50.0, 0.0, 80.0, 199.0}) {
        CHECK(tunneling::occupation_at(j, 1, e, 0.05, OccupationModel::thermal_mode()) ==
              bcs::fermi(e, 0.05));
    }
}

TEST_CASE("occupation_at: thermal density reproduces scale factor one") {
    // When the requested density equals the thermal density the rescale
    // factor must come out ~1 (the sqrt-prefactor form is the leading
    // asymptotic of the exact integral, good to <1% at 50 mK).
    const Electrode al(190.0, 0.0, 1.72e4, 30.0);
    const Junction j(al, al, 18.6, 0.0);
    const double t = 0.05;
    const double n_th = bcs::thermal_qp_density(al, t);
    const TunnelContext ctx(j, t, OccupationModel::noneq(n_th, n_th));
    CHECK(ctx.occupation_scale(1) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(ctx.occupation_scale(2) == doctest::Approx(1.0).epsilon(0.01));

    // cross-check the density normalization against a brute-force sum
    const double log_ref = oracle::log_density_per_scale_riemann(
        bcs::gap_at_temperature(190.0, t), 0.0, 1.72e4, t, 2000000);
    const double a_ref = std::exp(std::log(n_th) - log_ref);
    CHECK(ctx.occupation_scale(1) == doctest::Approx(a_ref).epsilon(0.02));
}

TEST_CASE("occupation_at: zero density empties states above the gap") {
    const Junction j = al_ti_junction();
    const auto occ = OccupationModel::noneq(0.0, 0.0);
    CHECK(tunneling::occupation_at(j, 1, 195.0, 0.02, occ) == 0.0);
    CHECK(tunneling::occupation_at(j, 1, 1000.0, 0.02, occ) == 0.0);
    CHECK(tunneling::occupation_at(j, 1, -195.0, 0.02, occ) == 1.0);
    // inside the gap the (Dynes-floor) states keep thermal occupation
    CHECK(tunneling::occupation_at(j, 1, 0.0, 0.02, occ) == 0.5);
}

TEST_CASE("occupation_at: particle-hole consistency of the rescaled shape") {
    const Junction j = al_ti_junction();
    const auto occ = OccupationModel::noneq(0.5, 1.5);
    const TunnelContext ctx(j, 0.05, occ);
    for (int idx : {1, 2}) {
        for (double e : {120.0, 200.0, 260.0, 400.0}) {
            if (e < ctx.gap_uev(idx)) continue;
            const double above = ctx.occupation(idx, e);
            const double below = ctx.occupation(idx, -e);
            CHECK(above == doctest::Approx(1.0 - below).epsilon(1e-12));
            CHECK(ctx.hole_occupation(idx, -e) == doctest::Approx(above).epsilon(1e-12));
        }
    }
}

TEST_CASE("occupation_at: unrealizable density raises NonNormalizable") {
    const Junction j = al_ti_junction();
    // at 20 mK even a modest fraction of the band cannot be filled with a
    // thermal-shaped tail of occupation <= 1
    CHECK_THROWS_AS(TunnelContext(j, 0.02, OccupationModel::noneq(1e22, 0.0)), NonNormalizable);
}

TEST_CASE("current_sweep is bitwise independent of thread count") {
    const Junction j = al_ti_junction();
    std::vector<double> bias;
    for (double v = -420.0; v <= 420.0; v += 60.0) bias.push_back(v);
    const auto one = tunneling::current_sweep(j, bias, 0.02, OccupationModel::thermal_mode(), 1);
    const auto four = tunneling::current_sweep(j, bias, 0.02, OccupationModel::thermal_mode(), 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}
