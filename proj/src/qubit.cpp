#include "junctionlab/qubit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "junctionlab/bcs.hpp"
#include "junctionlab/constants.hpp"
#include "junctionlab/errors.hpp"
#include "junctionlab/parallel.hpp"

namespace junctionlab::qubit {

double qubit_bias_uv(const TransmonParams& q) {
    return constants::h_uev_per_ghz * q.fge_ghz;  // ueV, and 1 ueV <-> 1 uV
}

DecayResult decay_rate_from_currents(const TransmonParams& q, double i_fwd_na, double i_bwd_na) {
    DecayResult r;
    r.i_fwd_na = i_fwd_na;
    r.i_bwd_na = i_bwd_na;
    const double photon_uev = constants::h_uev_per_ghz * q.fge_ghz;
    const double ratio = q.ec_uev / photon_uev;                      // E_C / (h f_ge)
    const double events_per_s = (i_fwd_na + i_bwd_na) * constants::na_over_e_per_s;  // I / e
    r.gamma_per_s = ratio * events_per_s;
    r.t1_us = r.gamma_per_s > 0.0 ? 1e6 / r.gamma_per_s : std::numeric_limits<double>::infinity();
    return r;
}

DecayResult qp_decay_rate(const TransmonParams& q, const Junction& j,
                          const QuasiparticleState& state,
                          tunneling::OccupationModel::Mode occ_mode) {
    const double t = state.temperature_k;

    tunneling::OccupationModel occ;
    if (occ_mode == tunneling::OccupationModel::Mode::noneq_density) {
        const auto [neq1, neq2] = tunneling::partition_nonequilibrium(j, state.n_neq_total_um3, t);
        occ = tunneling::OccupationModel::noneq(bcs::thermal_qp_density(j.electrode1, t) + neq1,
                                                bcs::thermal_qp_density(j.electrode2, t) + neq2);
    }

    const auto currents = tunneling::directional_currents(j, qubit_bias_uv(q), t, occ);
    DecayResult r = decay_rate_from_currents(q, currents.forward_na, currents.backward_na);

    // Unit audit: Gamma must factor as the dimensionless E_C/(h f_ge) times
    // the tunneling event rate (I/e). Guards against unit drift if either
    // path is ever refactored.
    const double audit = (q.ec_uev / (constants::h_uev_per_ghz * q.fge_ghz)) *
                         ((currents.forward_na + currents.backward_na) * constants::na_over_e_per_s);
    if (std::abs(audit - r.gamma_per_s) > 1e-12 * std::max(std::abs(audit), 1.0)) {
        throw std::logic_error("qp_decay_rate: rate factorization audit failed");
    }
    return r;
}

std::vector<T1Point> t1_vs_temperature(const TransmonParams& q, const Junction& j,
                                       double n_neq_total_um3,
                                       const std::vector<double>& temperatures_k,
                                       tunneling::OccupationModel::Mode occ_mode, int threads) {
    for (std::size_t i = 0; i + 1 < temperatures_k.size(); ++i) {
        if (!(temperatures_k[i] < temperatures_k[i + 1])) {
            throw ValidationError("t1_vs_temperature: temperatures must be strictly increasing");
        }
    }
    for (double t : temperatures_k) {
        if (!(t > 0.0)) throw ValidationError("t1_vs_temperature: temperatures must be > 0");
    }

    return parallel_map<T1Point>(temperatures_k.size(), threads, [&](std::size_t i) {
        const double t = temperatures_k[i];
        try {
            const QuasiparticleState state(t, n_neq_total_um3, 0.0, 0.0);
            return T1Point{t, qp_decay_rate(q, j, state, occ_mode)};
        } catch (const std::exception& e) {
            throw QuadratureFailure("t1_vs_temperature failed at T = " + std::to_string(t) +
                                    " K: " + e.what());
        }
    });
}

}  // namespace junctionlab::qubit
