#pragma once

// Physical constants in the internal unit system:
//   energy ueV, voltage uV, current nA, temperature K, resistance kOhm,
//   conductance uS, quasiparticle density um^-3, DOS ueV^-1 um^-3.
// With these choices e * (1 uV) = 1 ueV and (1 uV)/(1 kOhm) = 1 nA, so the
// tunneling integrals carry no stray powers of ten.

namespace junctionlab::constants {

/// Boltzmann constant, ueV per K (exact SI value expressed in eV/K).
inline constexpr double k_boltzmann_uev_per_k = 86.17333262145177;

/// Planck constant, ueV per GHz.
inline constexpr double h_uev_per_ghz = 4.135667696923859;

/// Elementary charge, coulomb.
inline constexpr double e_coulomb = 1.602176634e-19;

/// Tunneling events per second carried by 1 nA: (1e-9 A) / e.
inline constexpr double na_over_e_per_s = 6.241509074460763e9;

/// BCS weak-coupling gap ratio Delta0 = bcs_gap_ratio * kB * Tc.
inline constexpr double bcs_gap_ratio = 1.764;

}  // namespace junctionlab::constants
