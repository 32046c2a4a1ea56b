#include "junctionlab/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "junctionlab/errors.hpp"

namespace junctionlab::proximity {

BilayerSpec::BilayerSpec(Electrode a, Electrode b, double tau)
    : layer_a(std::move(a)), layer_b(std::move(b)), coupling(tau) {
    if (!(std::isfinite(tau) && tau >= 0.0 && tau <= 1.0)) {
        throw ValidationError("BilayerSpec: coupling must be in [0, 1]");
    }
}

namespace {

double full_contact_gap(const BilayerSpec& spec) {
    const double wa = spec.layer_a.n0_per_uev_um3 * spec.layer_a.thickness_nm;
    const double wb = spec.layer_b.n0_per_uev_um3 * spec.layer_b.thickness_nm;
    return (wa * spec.layer_a.gap0_uev + wb * spec.layer_b.gap0_uev) / (wa + wb);
}

}  // namespace

double cooper_limit_gap(const BilayerSpec& spec) {
    const double ga = spec.layer_a.gap0_uev;
    return (1.0 - spec.coupling) * ga + spec.coupling * full_contact_gap(spec);
}

double calibrate_coupling(const BilayerSpec& spec, double measured_gap_uev) {
    const double ga = spec.layer_a.gap0_uev;
    const double g1 = full_contact_gap(spec);
    const double lo = std::min(ga, g1);
    const double hi = std::max(ga, g1);
    if (!(measured_gap_uev >= lo && measured_gap_uev <= hi)) {
        throw OutOfRange("calibrate_coupling: measured gap " + std::to_string(measured_gap_uev) +
                         " ueV outside attainable [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] ueV");
    }
    if (ga == g1) return 0.0;  // zero-effect cap: any tau reproduces ga, report decoupled
    return (ga - measured_gap_uev) / (ga - g1);
}

}  // namespace junctionlab::proximity
