#pragma once

#include "junctionlab/types.hpp"

namespace junctionlab::proximity {

/// Thin superconducting bilayer (base layer a capped by layer b) with an
/// interface coupling tau in [0, 1]: 1 is a clean contact, 0 fully
/// decoupled (an oxide barrier between the films).
struct BilayerSpec {
    Electrode layer_a;
    Electrode layer_b;
    double coupling = 1.0;

    BilayerSpec() = default;
    BilayerSpec(Electrode a, Electrode b, double tau);
};

/// Effective gap of the bilayer in the Cooper (thin-film) limit:
///   Delta_eff(tau=1) = (n0_a d_a Delta_a + n0_b d_b Delta_b)
///                      / (n0_a d_a + n0_b d_b)
/// with a linear interpolation toward the bare layer-a gap as the interface
/// decouples: Delta_eff(tau) = (1-tau) Delta_a + tau Delta_eff(1).
double cooper_limit_gap(const BilayerSpec& spec);

/// Inverts the interpolation: the tau that reproduces measured_gap.
/// Throws OutOfRange when the target is outside [Delta_eff(1), Delta_a]
/// (for a lower-gap cap).
double calibrate_coupling(const BilayerSpec& spec, double measured_gap_uev);

}  // namespace junctionlab::proximity
