#pragma once

#include <string>
#include <vector>

namespace junctionlab {

/// One superconducting film (or an effective bilayer reduced to a single gap).
struct Electrode {
    double gap0_uev = 190.0;       ///< zero-temperature gap Delta0
    double dynes_uev = 0.0;        ///< Dynes broadening Gamma_D >= 0
    double n0_per_uev_um3 = 1.72e4;///< single-spin DOS at the Fermi level
    double thickness_nm = 30.0;

    Electrode() = default;
    Electrode(double gap0, double dynes, double n0, double thickness);
};

/// SIS tunnel junction: bottom electrode (1, fixed-gap side in fits),
/// counter-electrode (2), normal-state resistance and barrier transparency.
struct Junction {
    Electrode electrode1;
    Electrode electrode2;
    double rn_kohm = 10.0;
    double transparency = 0.0;  ///< D = |t|^2 in [0, 1]

    Junction() = default;
    Junction(Electrode e1, Electrode e2, double rn, double d);
};

/// Temperature plus quasiparticle densities: the shared nonequilibrium total
/// and the resolved per-electrode totals (thermal + partitioned share).
struct QuasiparticleState {
    double temperature_k = 0.02;
    double n_neq_total_um3 = 0.0;
    double n1_um3 = 0.0;
    double n2_um3 = 0.0;

    QuasiparticleState() = default;
    QuasiparticleState(double t_k, double n_neq, double n1, double n2);
};

struct TransmonParams {
    double ec_uev = 1.0;   ///< charging energy E_C
    double fge_ghz = 5.0;  ///< qubit transition frequency

    TransmonParams() = default;
    TransmonParams(double ec, double fge);
};

/// Sampled IV trace; bias strictly increasing, finite samples only.
struct IVCurve {
    std::vector<double> bias_uv;
    std::vector<double> current_na;
    std::string label;

    IVCurve() = default;
    IVCurve(std::vector<double> bias, std::vector<double> current, std::string lab = {});
};

/// Sampled dI/dV trace in uS on a strictly increasing bias grid.
struct ConductanceCurve {
    std::vector<double> bias_uv;
    std::vector<double> didv_us;
    std::string label;

    ConductanceCurve() = default;
    ConductanceCurve(std::vector<double> bias, std::vector<double> didv, std::string lab = {});
};

/// Diagnostic check of the IVCurve invariants. Returns one message per
/// violation; empty result means the curve is well formed.
std::vector<std::string> validate_iv(const IVCurve& curve);

/// Same checks for a conductance trace.
std::vector<std::string> validate_conductance(const ConductanceCurve& curve);

}  // namespace junctionlab
