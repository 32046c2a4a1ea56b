#include <doctest.h>

#include <cmath>

#include "junctionlab/errors.hpp"
#include "junctionlab/mar.hpp"

using namespace junctionlab;
using mar::MarParams;
using mar::OnsetFamily;

namespace {
Junction make_junction(double gap1, double gap2, double rn, double d) {
    return Junction(Electrode(gap1, 0.0, 1.72e4, 30.0), Electrode(gap2, 0.0, 1.72e4, 50.0), rn,
                    d);
}
}  // namespace

TEST_CASE("subgap_onsets: first-order asymmetric onsets") {
    const auto onsets = mar::subgap_onsets(190.0, 110.0, 1);
    REQUIRE(onsets.size() == 3);
    CHECK(onsets[0].bias_uv == doctest::Approx(110.0));
    CHECK(onsets[1].bias_uv == doctest::Approx(190.0));
    CHECK(onsets[2].bias_uv == doctest::Approx(300.0));
    CHECK(onsets[0].terms.front().family == OnsetFamily::gap2);
    CHECK(onsets[2].terms.front().family == OnsetFamily::sum);
}

TEST_CASE("subgap_onsets: coincident families merge") {
    const auto onsets = mar::subgap_onsets(190.0, 190.0, 2);
    REQUIRE(onsets.size() == 3);
    CHECK(onsets[0].bias_uv == doctest::Approx(95.0));
    CHECK(onsets[1].bias_uv == doctest::Approx(190.0));
    CHECK(onsets[2].bias_uv == doctest::Approx(380.0));
    // 190 collects gap1/1, gap2/1 and sum/2
    CHECK(onsets[1].terms.size() == 3);
}

TEST_CASE("subgap_onsets: hand-enumerated 200/100 family") {
    const auto onsets = mar::subgap_onsets(200.0, 100.0, 3);
    REQUIRE(onsets.size() == 7);
    const double expected[] = {100.0 / 3.0, 50.0, 200.0 / 3.0, 100.0, 150.0, 200.0, 300.0};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(onsets[i].bias_uv == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    // 100 uV collects gap1/2, gap2/1 and sum/3
    CHECK(onsets[3].terms.size() == 3);
    // strictly sorted, all positive
    for (std::size_t i = 0; i + 1 < onsets.size(); ++i) {
        CHECK(onsets[i].bias_uv < onsets[i + 1].bias_uv);
    }
    CHECK(onsets.front().bias_uv > 0.0);
}

TEST_CASE("mar_current: zero transparency means zero current") {
    const Junction j = make_junction(190.0, 110.0, 8.5, 0.0);
    const MarParams p(3, 4.0, 100.0);
    for (double v : {-200.0, 0.0, 50.0, 400.0}) CHECK(mar::mar_current(j, v, p) == 0.0);
}

TEST_CASE("mar_current: saturation value") {
    const double d = 0.05;
    const Junction j = make_junction(190.0, 110.0, 8.5, d);
    const MarParams p(3, 4.0, 100.0);
    const double sat = mar::mar_current(j, 5000.0, p);
    const double expected = 100.0 * 3.0 * (d + d * d + d * d * d);
    CHECK(sat == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("mar_current: odd in V and non-decreasing in |V|") {
    const Junction j = make_junction(190.0, 110.0, 8.5, 0.05);
    const MarParams p(3, 4.0, 100.0);
    double prev = 0.0;
    for (double v = 0.0; v <= 600.0; v += 2.0) {
        const double i = mar::mar_current(j, v, p);
        CHECK(i >= prev - 1e-12);
        CHECK(mar::mar_current(j, -v, p) == doctest::Approx(-i).epsilon(1e-14));
        prev = i;
    }
}

TEST_CASE("mar_current: consecutive-order step heights scale by D") {
    const double d = 0.05;
    const Junction j = make_junction(190.0, 110.0, 8.5, d);
    const double v_sat = 50000.0;
    // isolate order n as the saturated difference between n_max = n and n-1
    const double h1 = mar::mar_current(j, v_sat, MarParams(1, 4.0, 100.0));
    const double h2 = mar::mar_current(j, v_sat, MarParams(2, 4.0, 100.0)) - h1;
    const double h3 = mar::mar_current(j, v_sat, MarParams(3, 4.0, 100.0)) - h1 - h2;
    CHECK(h2 / h1 == doctest::Approx(d).epsilon(1e-6));
    CHECK(h3 / h2 == doctest::Approx(d).epsilon(1e-6));
}

TEST_CASE("excess_current: ohmic line through the origin") {
    std::vector<double> bias, current;
    for (double v = 0.0; v <= 500.0; v += 10.0) {
        bias.push_back(v);
        current.push_back(v / 18.6);
    }
    const auto fit = mar::excess_current(IVCurve(bias, current), 300.0);
    CHECK(fit.i_exc_na == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.rn_est_kohm == doctest::Approx(18.6).epsilon(1e-10));
}

TEST_CASE("excess_current: constructed 5 nA excess") {
    std::vector<double> bias, current;
    for (double v = 0.0; v <= 500.0; v += 10.0) {
        bias.push_back(v);
        current.push_back(v / 8.5 + 5.0);
    }
    const auto fit = mar::excess_current(IVCurve(bias, current), 250.0);
    CHECK(fit.i_exc_na == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(fit.rn_est_kohm == doctest::Approx(8.5).epsilon(1e-10));
}

TEST_CASE("excess_current: too few samples in the window") {
    std::vector<double> bias, current;
    for (double v = 0.0; v <= 100.0; v += 10.0) {
        bias.push_back(v);
        current.push_back(v);
    }
    CHECK_THROWS_AS(mar::excess_current(IVCurve(bias, current), 80.0), InsufficientData);
}
