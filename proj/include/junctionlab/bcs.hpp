#pragma once

#include "junctionlab/types.hpp"

namespace junctionlab::bcs {

/// Gap and Dynes broadening at the evaluation temperature.
struct DosProfile {
    double gap_uev = 0.0;
    double dynes_uev = 0.0;

    DosProfile() = default;
    DosProfile(double gap, double dynes);
};

/// Reduced quasiparticle density of states
///   n(E) = | Re[ (E - i Gamma_D) / sqrt((E - i Gamma_D)^2 - Delta^2) ] |.
/// Even in E, -> 1 as |E| -> inf, and exactly 0 inside the gap for
/// Gamma_D = 0. Defined as 1 for a gapless profile.
double dos(double energy_uev, const DosProfile& profile);

/// Fermi occupation 1/(1 + exp(E/kB T)), overflow safe for any finite E.
double fermi(double energy_uev, double temperature_k);

/// log of the Fermi occupation, usable far into the tail where fermi()
/// underflows.
double log_fermi(double energy_uev, double temperature_k);

/// Standard two-fluid interpolation of the BCS gap:
///   Delta(T) = Delta0 * tanh(1.74 * sqrt(Tc/T - 1)) for T < Tc, else 0.
double gap_at_temperature(double gap0_uev, double temperature_k);

/// BCS weak-coupling critical temperature Tc = Delta0 / (1.764 kB).
double tc_from_gap(double gap0_uev);

/// Thermal quasiparticle density (both spins, both excitation branches):
///   n_qp = 2 n0 sqrt(2 pi kB T Delta(T)) exp(-Delta(T)/(kB T))  [um^-3].
double thermal_qp_density(const Electrode& electrode, double temperature_k);

}  // namespace junctionlab::bcs
