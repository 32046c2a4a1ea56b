#include "junctionlab/tunneling.hpp"

#include <array>
#include <cmath>

#include "junctionlab/constants.hpp"
#include "junctionlab/errors.hpp"
#include "junctionlab/parallel.hpp"
#include "junctionlab/quadrature.hpp"

namespace junctionlab::tunneling {

using constants::k_boltzmann_uev_per_k;

namespace {

double logistic(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

/// Quasiparticle density carried by a thermal-shaped occupation of unit
/// scale, factored as exp(-Delta/kT) * j_tilde so it stays finite at low T.
/// Returns log(4 n0 * integral) = log(4 n0 j_tilde) - Delta/kT.
///
/// Uses the substitution E = Delta + u^2, which removes the inverse-sqrt
/// edge of the BCS DOS and leaves a smooth Gaussian-decaying integrand.
double log_density_integral(double gap_uev, double dynes_uev, double n0, double temperature_k) {
    const double kt = k_boltzmann_uev_per_k * temperature_k;
    const bcs::DosProfile profile(gap_uev, dynes_uev);
    const double u_max = std::sqrt(45.0 * kt);
    auto integrand = [&](double u) {
        const double e = gap_uev + u * u;
        // f(E) = exp(-E/kT) * s(E); the Boltzmann factor exp(-gap/kT) is
        // pulled out of the integral, leaving exp(-u^2/kT) * s(E).
        const double s = 1.0 / (1.0 + std::exp(-e / kt));
        return bcs::dos(e, profile) * 2.0 * u * std::exp(-u * u / kt) * s;
    };
    const std::array<double, 3> marks{std::sqrt(std::max(dynes_uev, 1e-12)),
                                      std::sqrt(kt), std::sqrt(4.0 * kt)};
    quadrature::Options opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 0.0;
    const auto r = quadrature::integrate(integrand, 0.0, u_max, marks, opt);
    return std::log(4.0 * n0 * r.value) - gap_uev / kt;
}

}  // namespace

TunnelContext::TunnelContext(const Junction& junction, double temperature_k,
                             const OccupationModel& occ)
    : temperature_k_(temperature_k), rn_kohm_(junction.rn_kohm), mode_(occ.mode) {
    if (!(temperature_k > 0.0)) throw ValidationError("TunnelContext: temperature must be > 0");

    auto resolve = [&](const Electrode& e, double n_target) {
        ElectrodeState s;
        s.gap = bcs::gap_at_temperature(e.gap0_uev, temperature_k);
        // Floor keeps the DOS edge integrable; it is applied to the current
        // integrand only, never to the density bookkeeping below.
        s.dynes = std::max(e.dynes_uev, dynes_floor_fraction * s.gap);
        if (mode_ == OccupationModel::Mode::noneq_density) {
            if (n_target < 0.0) throw ValidationError("OccupationModel: density must be >= 0");
            if (n_target == 0.0) {
                s.zero_density = true;
            } else {
                const double log_density =
                    log_density_integral(s.gap, e.dynes_uev, e.n0_per_uev_um3, temperature_k);
                s.log_scale = std::log(n_target) - log_density;
                if (s.log_scale + bcs::log_fermi(s.gap, temperature_k) > 0.0) {
                    throw NonNormalizable(
                        "requested quasiparticle density needs occupation > 1 at the gap edge");
                }
            }
        }
        return s;
    };

    e1_ = resolve(junction.electrode1, occ.n1_um3);
    e2_ = resolve(junction.electrode2, occ.n2_um3);
    energy_cutoff_uev_ =
        32.0 * std::max(e1_.gap, e2_.gap) + 40.0 * k_boltzmann_uev_per_k * temperature_k;
}

double TunnelContext::occupation(int electrode_index, double energy_uev) const {
    const ElectrodeState& s = electrode_index == 1 ? e1_ : e2_;
    if (mode_ == OccupationModel::Mode::thermal || std::abs(energy_uev) < s.gap) {
        return bcs::fermi(energy_uev, temperature_k_);
    }
    if (energy_uev >= 0.0) {
        if (s.zero_density) return 0.0;
        const double la = s.log_scale + bcs::log_fermi(energy_uev, temperature_k_);
        return la >= 0.0 ? 1.0 : std::exp(la);
    }
    if (s.zero_density) return 1.0;
    const double la = s.log_scale + bcs::log_fermi(-energy_uev, temperature_k_);
    return la >= 0.0 ? 0.0 : 1.0 - std::exp(la);
}

double TunnelContext::hole_occupation(int electrode_index, double energy_uev) const {
    const ElectrodeState& s = electrode_index == 1 ? e1_ : e2_;
    if (mode_ == OccupationModel::Mode::thermal || std::abs(energy_uev) < s.gap) {
        return bcs::fermi(-energy_uev, temperature_k_);
    }
    if (energy_uev >= 0.0) {
        if (s.zero_density) return 1.0;
        const double la = s.log_scale + bcs::log_fermi(energy_uev, temperature_k_);
        return la >= 0.0 ? 0.0 : 1.0 - std::exp(la);
    }
    if (s.zero_density) return 0.0;
    const double la = s.log_scale + bcs::log_fermi(-energy_uev, temperature_k_);
    return la >= 0.0 ? 1.0 : std::exp(la);
}

double TunnelContext::gap_uev(int electrode_index) const {
    return electrode_index == 1 ? e1_.gap : e2_.gap;
}

double TunnelContext::dynes_floored_uev(int electrode_index) const {
    return electrode_index == 1 ? e1_.dynes : e2_.dynes;
}

double TunnelContext::occupation_scale(int electrode_index) const {
    if (mode_ == OccupationModel::Mode::thermal) return 1.0;
    const ElectrodeState& s = electrode_index == 1 ? e1_ : e2_;
    return s.zero_density ? 0.0 : std::exp(s.log_scale);
}

double TunnelContext::integrate_current(double bias_uv, int which) const {
    const double ev = bias_uv;  // e * (1 uV) = 1 ueV
    const bcs::DosProfile p1 = e1_.profile();
    const bcs::DosProfile p2 = e2_.profile();

    auto integrand = [&](double e) {
        const double d1 = bcs::dos(e, p1);
        const double d2 = bcs::dos(e + ev, p2);
        double w;
        switch (which) {
            case 1:
                w = occupation(1, e) * hole_occupation(2, e + ev);
                break;
            case 2:
                w = occupation(2, e + ev) * hole_occupation(1, e);
                break;
            default:
                w = occupation(1, e) - occupation(2, e + ev);
        }
        return d1 * d2 * w;
    };

    // Panels split at the four DOS edges; 0 and -eV mark the occupation
    // crossovers (relevant for gapless electrodes).
    const std::array<double, 6> edges{-e1_.gap, e1_.gap, -e2_.gap - ev, e2_.gap - ev, 0.0, -ev};
    quadrature::Options opt;
    opt.rel_tol = 1e-6;
    opt.abs_tol = 1e-12;
    opt.max_evals = 400000;
    const auto r = quadrature::integrate(integrand, -energy_cutoff_uev_, energy_cutoff_uev_,
                                         edges, opt);
    return r.value / rn_kohm_;  // ueV / kOhm = nA with e folded into the units
}

double TunnelContext::qp_current(double bias_uv) const { return integrate_current(bias_uv, 0); }

DirectionalCurrents TunnelContext::directional_currents(double bias_uv) const {
    DirectionalCurrents d;
    d.forward_na = integrate_current(bias_uv, 1);
    d.backward_na = integrate_current(bias_uv, 2);
    return d;
}

double qp_current(const Junction& junction, double bias_uv, double temperature_k,
                  const OccupationModel& occ) {
    return TunnelContext(junction, temperature_k, occ).qp_current(bias_uv);
}

DirectionalCurrents directional_currents(const Junction& junction, double bias_uv,
                                         double temperature_k, const OccupationModel& occ) {
    return TunnelContext(junction, temperature_k, occ).directional_currents(bias_uv);
}

std::pair<double, double> partition_nonequilibrium(const Junction& junction, double n_total_um3,
                                                   double temperature_k) {
    if (n_total_um3 < 0.0) throw ValidationError("partition_nonequilibrium: n_total must be >= 0");
    if (n_total_um3 == 0.0) return {0.0, 0.0};
    const double kt = k_boltzmann_uev_per_k * temperature_k;
    auto log_weight = [&](const Electrode& e) {
        const double gap = bcs::gap_at_temperature(e.gap0_uev, temperature_k);
        if (gap <= 0.0) return std::log(e.n0_per_uev_um3) + std::log(kt);
        return std::log(e.n0_per_uev_um3) + 0.5 * std::log(kt * gap) - gap / kt;
    };
    const double n1 =
        n_total_um3 * logistic(log_weight(junction.electrode1) - log_weight(junction.electrode2));
    return {n1, n_total_um3 - n1};
}

double occupation_at(const Junction& junction, int electrode_index, double energy_uev,
                     double temperature_k, const OccupationModel& occ) {
    return TunnelContext(junction, temperature_k, occ).occupation(electrode_index, energy_uev);
}

std::vector<double> current_sweep(const Junction& junction, std::span<const double> bias_uv,
                                  double temperature_k, const OccupationModel& occ, int threads) {
    const TunnelContext ctx(junction, temperature_k, occ);
    return parallel_map<double>(bias_uv.size(), threads,
                                [&](std::size_t i) { return ctx.qp_current(bias_uv[i]); });
}

}  // namespace junctionlab::tunneling
