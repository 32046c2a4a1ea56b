#pragma once

#include <vector>

#include "junctionlab/tunneling.hpp"
#include "junctionlab/types.hpp"

namespace junctionlab::qubit {

/// Quasiparticle-induced relaxation of the qubit excited state.
struct DecayResult {
    double gamma_per_s = 0.0;  ///< Gamma_{e->g}
    double t1_us = 0.0;        ///< 1e6 / gamma (inf when gamma == 0)
    double i_fwd_na = 0.0;
    double i_bwd_na = 0.0;

    bool has_finite_t1() const { return gamma_per_s > 0.0; }
};

/// The rate prefactor applied to the summed directional currents:
///   Gamma = E_C / (h f_ge e) * (I_fwd + I_bwd).
/// Factored out so the arithmetic is testable on its own; qp_decay_rate
/// audits its result against this on every call.
DecayResult decay_rate_from_currents(const TransmonParams& q, double i_fwd_na, double i_bwd_na);

/// Evaluates the directional tunneling currents at the bias equivalent to
/// the qubit transition (eV = h f_ge) and converts them to a decay rate.
/// Per-electrode densities are the thermal populations plus the partitioned
/// share of state.n_neq_total (state.n1/n2 are ignored as inputs; the
/// resolved values are what the occupation model uses).
DecayResult qp_decay_rate(const TransmonParams& q, const Junction& j,
                          const QuasiparticleState& state,
                          tunneling::OccupationModel::Mode occ_mode);

struct T1Point {
    double temperature_k = 0.0;
    DecayResult decay;
};

/// Recomputes gaps, densities, partition and decay rate at every listed
/// temperature. Points are independent (parallel-map contract).
std::vector<T1Point> t1_vs_temperature(const TransmonParams& q, const Junction& j,
                                       double n_neq_total_um3,
                                       const std::vector<double>& temperatures_k,
                                       tunneling::OccupationModel::Mode occ_mode =
                                           tunneling::OccupationModel::Mode::noneq_density,
                                       int threads = 1);

/// Static bias equivalent to the qubit transition, in uV.
double qubit_bias_uv(const TransmonParams& q);

}  // namespace junctionlab::qubit
