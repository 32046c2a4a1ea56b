#pragma once

#include <span>
#include <utility>
#include <vector>

#include "junctionlab/bcs.hpp"
#include "junctionlab/types.hpp"

namespace junctionlab::tunneling {

/// How quasiparticle states are occupied in the current integrals.
///
/// thermal:         occupation is exactly fermi(E, T) in both electrodes.
/// noneq_density:   occupation keeps the thermal shape but is rescaled by a
///                  per-electrode scalar so the quasiparticle density equals
///                  the requested n_i. Inside the gap (where the Dynes floor
///                  leaves residual states) the occupation stays thermal.
struct OccupationModel {
    enum class Mode { thermal, noneq_density };

    Mode mode = Mode::thermal;
    double n1_um3 = 0.0;
    double n2_um3 = 0.0;

    static OccupationModel thermal_mode() { return {}; }
    static OccupationModel noneq(double n1, double n2) {
        return {Mode::noneq_density, n1, n2};
    }
};

/// Directional current pair of the tunneling integrals, in nA.
struct DirectionalCurrents {
    double forward_na = 0.0;   ///< electrode 1 -> 2, absorbing e V
    double backward_na = 0.0;  ///< electrode 2 -> 1, absorbing e V
};

/// Immutable per-(junction, temperature, occupation) evaluation state.
/// Building it resolves the finite-temperature gaps, the Dynes floor used to
/// regularize the quadrature, and the occupation rescale factors. Reuse one
/// context across a bias sweep; it is safe to share between threads.
class TunnelContext {
  public:
    TunnelContext(const Junction& junction, double temperature_k, const OccupationModel& occ);

    /// Net quasiparticle current I(V) in nA.
    double qp_current(double bias_uv) const;

    /// Forward/backward decomposition; forward - backward == qp_current
    /// up to quadrature tolerance, and both components are >= 0.
    DirectionalCurrents directional_currents(double bias_uv) const;

    /// Occupation of a quasiparticle state at energy E in the given
    /// electrode (1 or 2).
    double occupation(int electrode_index, double energy_uev) const;

    /// 1 - occupation, computed without cancellation in the deep tails
    /// (this is what the directional integrands use for final-state
    /// availability).
    double hole_occupation(int electrode_index, double energy_uev) const;

    double gap_uev(int electrode_index) const;
    double dynes_floored_uev(int electrode_index) const;
    /// Occupation rescale factor a_i (1 in thermal mode).
    double occupation_scale(int electrode_index) const;

    double temperature_k() const { return temperature_k_; }
    double energy_cutoff_uev() const { return energy_cutoff_uev_; }

  private:
    struct ElectrodeState {
        double gap = 0.0;        // Delta_i(T)
        double dynes = 0.0;      // floored, used in the current integrand
        double log_scale = 0.0;  // ln(a_i)
        bool zero_density = false;
        bcs::DosProfile profile() const { return {gap, dynes}; }
    };

    double integrate_current(double bias_uv, int which) const;  // 0 net, 1 fwd, 2 bwd

    double temperature_k_ = 0.0;
    double rn_kohm_ = 1.0;
    double energy_cutoff_uev_ = 0.0;
    OccupationModel::Mode mode_ = OccupationModel::Mode::thermal;
    ElectrodeState e1_;
    ElectrodeState e2_;
};

/// Net quasiparticle tunneling current across the junction at bias V:
///   I(V) = (1/(e Rn)) Int dos1(E) dos2(E + eV) [occ1(E) - occ2(E + eV)] dE
/// evaluated by adaptive quadrature with panel boundaries at the DOS edges.
double qp_current(const Junction& junction, double bias_uv, double temperature_k,
                  const OccupationModel& occ);

/// The two directional currents entering the quasiparticle decay rate.
DirectionalCurrents directional_currents(const Junction& junction, double bias_uv,
                                         double temperature_k, const OccupationModel& occ);

/// Splits a shared nonequilibrium density between the electrodes in
/// proportion to Boltzmann occupation weights
///   w_i = n0_i sqrt(kB T Delta_i(T)) exp(-Delta_i(T)/(kB T)).
/// Conserves n_total exactly; for T -> 0 everything collects in the
/// low-gap electrode.
std::pair<double, double> partition_nonequilibrium(const Junction& junction, double n_total_um3,
                                                   double temperature_k);

/// Occupation of a quasiparticle state (convenience wrapper building a
/// one-shot context).
double occupation_at(const Junction& junction, int electrode_index, double energy_uev,
                     double temperature_k, const OccupationModel& occ);

/// I(V) over a bias grid; points are independent, so the result is bitwise
/// identical for any thread count.
std::vector<double> current_sweep(const Junction& junction, std::span<const double> bias_uv,
                                  double temperature_k, const OccupationModel& occ,
                                  int threads = 1);

/// Fraction of the zero-temperature gap used as the Dynes floor when the
/// configured broadening is smaller (keeps the edge integrable).
inline constexpr double dynes_floor_fraction = 1e-4;

}  // namespace junctionlab::tunneling
