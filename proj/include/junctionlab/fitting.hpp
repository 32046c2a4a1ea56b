#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "junctionlab/mar.hpp"
#include "junctionlab/types.hpp"

namespace junctionlab::fitting {

/// Parameters the fitter knows how to vary.
enum class ParamId {
    delta1,          ///< bottom-electrode gap, ueV
    delta2,          ///< counter-electrode gap, ueV
    rn,              ///< normal-state resistance, kOhm
    transparency,    ///< MAR transparency D
    dynes1,          ///< Dynes broadening of electrode 1, ueV
    dynes2,          ///< Dynes broadening of electrode 2, ueV
    temperature,     ///< bath temperature, K
    v_offset,        ///< bias offset, uV
    i_offset,        ///< current offset, nA
    mar_base_scale,  ///< MAR first-order step scale, nA
};

const char* param_name(ParamId id);
std::optional<ParamId> parse_param(const std::string& name);

struct Bounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct FitConfig {
    enum class Objective { current_space, conductance_space };

    std::vector<ParamId> free_params;
    std::map<ParamId, Bounds> bounds;  ///< required for every free parameter
    std::map<ParamId, double> fixed;   ///< explicit fixed assignments
    Objective objective = Objective::current_space;
    long max_evals = 3000;
    unsigned seed = 1;
    int restarts = 3;
    int mar_n_max = 3;
    double mar_step_width_uv = 4.0;
    int threads = 1;

    void validate() const;
};

struct FitResult {
    std::map<ParamId, double> params;       ///< full resolved parameter set
    double rms = 0.0;                       ///< nA (current) or uS (conductance)
    long evaluations = 0;
    bool converged = false;                 ///< false when the budget ran out
    std::map<ParamId, double> sensitivity;  ///< finite-difference curvature diagonal
};

/// Composite junction model: quasiparticle tunneling plus the MAR step
/// current, with bias and current offsets. Thermal occupations throughout.
struct CompositeParams {
    Junction junction;
    double temperature_k = 0.02;
    std::optional<mar::MarParams> mar_params;
    double v_offset_uv = 0.0;
    double i_offset_na = 0.0;
};

std::vector<double> composite_current(const CompositeParams& p, std::span<const double> bias_uv,
                                      int threads = 1);

/// Builds a CompositeParams from a resolved parameter map (defaults filled).
CompositeParams composite_from_params(const std::map<ParamId, double>& params, int mar_n_max,
                                      double mar_step_width_uv);

/// Heuristic seed values read off the data: ohmic slope over the top 20% of
/// |bias|, gap sum from the conductance maximum, transparency from the
/// excess current. Throws PeakNotFound when the conductance has no interior
/// maximum.
struct InitialEstimate {
    double gap_sum_uv = 0.0;
    double delta2_uev = 0.0;
    double rn_kohm = 0.0;
    double transparency = 0.0;
    double v_offset_uv = 0.0;
    double i_offset_na = 0.0;
};

InitialEstimate estimate_initial(const IVCurve& iv, double delta1_assumed_uev = 190.0,
                                 double mar_base_scale_na = 1.0);

/// Bounded derivative-free least squares: Nelder-Mead simplex with
/// seed-perturbed restarts. Deterministic for a fixed (data, cfg, seed);
/// restart ties break toward the lower rms, then the earlier restart.
FitResult fit_iv(const IVCurve& data, const FitConfig& cfg);

/// Plain-text result table: one row per result with the counter-electrode
/// gap (1 ueV), Rn (0.1 kOhm), transparency and residual rms, plus the
/// bottom-electrode assumption in a footer.
std::string report_table(const std::vector<FitResult>& results,
                         const std::vector<std::string>& labels, double delta1_assumed_uev);

}  // namespace junctionlab::fitting
