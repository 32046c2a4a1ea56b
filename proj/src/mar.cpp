#include "junctionlab/mar.hpp"

#include <algorithm>
#include <cmath>

#include "junctionlab/errors.hpp"

namespace junctionlab::mar {

namespace {
constexpr double kMergeTolUv = 0.01;

double logistic(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}
}  // namespace

MarParams::MarParams(int n, double width, double scale)
    : n_max(n), step_width_uv(width), base_scale_na(scale) {
    if (n < 1) throw ValidationError("MarParams: n_max must be >= 1");
    if (!(width > 0.0)) throw ValidationError("MarParams: step_width must be > 0");
    if (!(scale >= 0.0)) throw ValidationError("MarParams: base_scale must be >= 0");
}

std::string family_name(OnsetFamily f) {
    switch (f) {
        case OnsetFamily::gap1: return "gap1";
        case OnsetFamily::gap2: return "gap2";
        default: return "sum";
    }
}

std::vector<SubgapOnset> subgap_onsets(double gap1_uev, double gap2_uev, int n_max) {
    if (!(gap1_uev > 0.0) || !(gap2_uev > 0.0)) {
        throw ValidationError("subgap_onsets: gaps must be > 0");
    }
    if (n_max < 1) throw ValidationError("subgap_onsets: n_max must be >= 1");

    struct Raw {
        double v;
        OnsetTerm term;
    };
    std::vector<Raw> raw;
    raw.reserve(static_cast<std::size_t>(3 * n_max));
    for (int n = 1; n <= n_max; ++n) {
        raw.push_back({gap1_uev / n, {OnsetFamily::gap1, n}});
        raw.push_back({gap2_uev / n, {OnsetFamily::gap2, n}});
        raw.push_back({(gap1_uev + gap2_uev) / n, {OnsetFamily::sum, n}});
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.v != b.v) return a.v < b.v;
        return a.term.order < b.term.order;
    });

    std::vector<SubgapOnset> out;
    for (const Raw& r : raw) {
        if (!out.empty() && std::abs(out.back().bias_uv - r.v) < kMergeTolUv) {
            out.back().terms.push_back(r.term);
        } else {
            out.push_back({r.v, {r.term}});
        }
    }
    return out;
}

double mar_current(const Junction& junction, double bias_uv, const MarParams& params) {
    const double d = junction.transparency;
    if (d == 0.0 || params.base_scale_na == 0.0) return 0.0;
    const double g1 = junction.electrode1.gap0_uev;
    const double g2 = junction.electrode2.gap0_uev;
    const double v = std::abs(bias_uv);

    double total = 0.0;
    double dn = 1.0;
    for (int n = 1; n <= params.n_max; ++n) {
        dn *= d;
        total += dn * (logistic((v - g1 / n) / params.step_width_uv) +
                       logistic((v - g2 / n) / params.step_width_uv) +
                       logistic((v - (g1 + g2) / n) / params.step_width_uv));
    }
    const double sign = bias_uv > 0.0 ? 1.0 : (bias_uv < 0.0 ? -1.0 : 0.0);
    return sign * params.base_scale_na * total;
}

ExcessCurrentFit excess_current(const IVCurve& iv, double fit_window_low_uv) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < iv.bias_uv.size(); ++i) {
        if (iv.bias_uv[i] >= fit_window_low_uv) idx.push_back(i);
    }
    if (idx.size() < 10) {
        throw InsufficientData("excess_current: need >= 10 samples with bias >= " +
                               std::to_string(fit_window_low_uv) + " uV, have " +
                               std::to_string(idx.size()));
    }
    // Ordinary least squares for I = slope * V + intercept.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(idx.size());
    for (std::size_t i : idx) {
        sx += iv.bias_uv[i];
        sy += iv.current_na[i];
        sxx += iv.bias_uv[i] * iv.bias_uv[i];
        sxy += iv.bias_uv[i] * iv.current_na[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw InsufficientData("excess_current: degenerate bias window");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    if (!(slope > 0.0)) {
        throw InsufficientData("excess_current: non-positive high-bias slope");
    }
    return {intercept, 1.0 / slope};
}

}  // namespace junctionlab::mar
