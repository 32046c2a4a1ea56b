#pragma once

#include <string>
#include <vector>

#include "junctionlab/types.hpp"

namespace junctionlab::mar {

/// Phenomenological multiple-Andreev-reflection step model. Each reflection
/// order n contributes a smoothed current step of height base_scale * D^n at
/// every onset voltage of the three subharmonic families.
struct MarParams {
    int n_max = 3;               ///< highest reflection order
    double step_width_uv = 4.0;  ///< logistic smoothing width
    double base_scale_na = 1.0;  ///< first-order step scale I0

    MarParams() = default;
    MarParams(int n, double width, double scale);
};

enum class OnsetFamily { gap1, gap2, sum };

std::string family_name(OnsetFamily f);

/// One (family, order) contributor to a subgap step.
struct OnsetTerm {
    OnsetFamily family;
    int order;
};

/// A deduplicated subgap onset: coincident onsets from different families
/// merge into one entry with all contributing terms listed.
struct SubgapOnset {
    double bias_uv = 0.0;
    std::vector<OnsetTerm> terms;
};

/// Onset voltages {Delta1/n}, {Delta2/n}, {(Delta1+Delta2)/n} for
/// n = 1..n_max, sorted ascending and merged within 0.01 uV.
std::vector<SubgapOnset> subgap_onsets(double gap1_uev, double gap2_uev, int n_max);

/// Subgap step current, odd in V and non-decreasing in |V|:
///   I_MAR(V) = sign(V) * sum base_scale * D^order * sigma((|V|-V_on)/width).
double mar_current(const Junction& junction, double bias_uv, const MarParams& params);

/// Zero-bias intercept and slope of the high-bias ohmic branch:
/// least-squares line I = V/Rn + I_exc over samples with bias >= window_low.
struct ExcessCurrentFit {
    double i_exc_na = 0.0;
    double rn_est_kohm = 0.0;
};

ExcessCurrentFit excess_current(const IVCurve& iv, double fit_window_low_uv);

}  // namespace junctionlab::mar
