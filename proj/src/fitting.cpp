#include "junctionlab/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "junctionlab/errors.hpp"
#include "junctionlab/fitio.hpp"
#include "junctionlab/tunneling.hpp"

namespace junctionlab::fitting {

namespace {

struct ParamInfo {
    ParamId id;
    const char* name;
    double default_value;
};

constexpr ParamInfo kParams[] = {
    {ParamId::delta1, "delta1_ueV", 190.0},
    {ParamId::delta2, "delta2_ueV", 190.0},
    {ParamId::rn, "rn_kOhm", 10.0},
    {ParamId::transparency, "transparency", 0.0},
    {ParamId::dynes1, "dynes1_ueV", 0.0},
    {ParamId::dynes2, "dynes2_ueV", 0.0},
    {ParamId::temperature, "temperature_K", 0.02},
    {ParamId::v_offset, "v_offset_uV", 0.0},
    {ParamId::i_offset, "i_offset_nA", 0.0},
    {ParamId::mar_base_scale, "mar_base_scale_nA", 1.0},
};

const ParamInfo& info(ParamId id) {
    for (const auto& p : kParams) {
        if (p.id == id) return p;
    }
    throw std::logic_error("unknown ParamId");
}

}  // namespace

const char* param_name(ParamId id) { return info(id).name; }

std::optional<ParamId> parse_param(const std::string& name) {
    for (const auto& p : kParams) {
        if (name == p.name) return p.id;
    }
    return std::nullopt;
}

void FitConfig::validate() const {
    for (ParamId id : free_params) {
        auto it = bounds.find(id);
        if (it == bounds.end()) {
            throw ValidationError(std::string("FitConfig: free parameter '") + param_name(id) +
                                  "' has no bounds");
        }
        const Bounds& b = it->second;
        if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo < b.hi)) {
            throw ValidationError(std::string("FitConfig: bounds for '") + param_name(id) +
                                  "' must be finite with lo < hi");
        }
        if (fixed.count(id)) {
            throw ValidationError(std::string("FitConfig: parameter '") + param_name(id) +
                                  "' is both free and fixed");
        }
    }
    if (max_evals < 1) throw ValidationError("FitConfig: max_evals must be >= 1");
    if (restarts < 1) throw ValidationError("FitConfig: restarts must be >= 1");
}

CompositeParams composite_from_params(const std::map<ParamId, double>& params, int mar_n_max,
                                      double mar_step_width_uv) {
    auto value = [&](ParamId id) {
        auto it = params.find(id);
        return it == params.end() ? info(id).default_value : it->second;
    };
    CompositeParams cp;
    Electrode e1(value(ParamId::delta1), value(ParamId::dynes1), 1.72e4, 30.0);
    Electrode e2(value(ParamId::delta2), value(ParamId::dynes2), 1.72e4, 50.0);
    cp.junction = Junction(e1, e2, value(ParamId::rn), value(ParamId::transparency));
    cp.temperature_k = value(ParamId::temperature);
    const double base = value(ParamId::mar_base_scale);
    if (cp.junction.transparency > 0.0 && base > 0.0) {
        cp.mar_params = mar::MarParams(mar_n_max, mar_step_width_uv, base);
    }
    cp.v_offset_uv = value(ParamId::v_offset);
    cp.i_offset_na = value(ParamId::i_offset);
    return cp;
}

std::vector<double> composite_current(const CompositeParams& p, std::span<const double> bias_uv,
                                      int threads) {
    std::vector<double> shifted(bias_uv.begin(), bias_uv.end());
    for (double& v : shifted) v -= p.v_offset_uv;
    std::vector<double> current = tunneling::current_sweep(
        p.junction, shifted, p.temperature_k, tunneling::OccupationModel::thermal_mode(), threads);
    for (std::size_t i = 0; i < current.size(); ++i) {
        if (p.mar_params) {
            current[i] += mar::mar_current(p.junction, shifted[i], *p.mar_params);
        }
        current[i] += p.i_offset_na;
    }
    return current;
}

InitialEstimate estimate_initial(const IVCurve& iv, double delta1_assumed_uev,
                                 double mar_base_scale_na) {
    const ConductanceCurve g = fitio::differentiate_iv(iv);
    const std::size_t n = g.bias_uv.size();

    // Interior conductance maxima on each bias polarity.
    auto peak_on_side = [&](bool positive) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (positive != (g.bias_uv[i] > 0.0)) continue;
            if (!best || g.didv_us[i] > g.didv_us[*best]) best = i;
        }
        return best;
    };
    const auto pos_peak = peak_on_side(true);
    const auto neg_peak = peak_on_side(false);

    // The peak must stand above the ohmic plateau, otherwise there is no
    // superconducting feature to read a gap from.
    const double plateau = g.didv_us.back();
    if (!pos_peak || !(g.didv_us[*pos_peak] > 1.05 * plateau)) {
        throw PeakNotFound("estimate_initial: conductance has no interior maximum");
    }

    InitialEstimate est;
    est.v_offset_uv =
        neg_peak ? 0.5 * (g.bias_uv[*pos_peak] + g.bias_uv[*neg_peak]) : 0.0;
    est.gap_sum_uv = g.bias_uv[*pos_peak] - est.v_offset_uv;
    est.delta2_uev = est.gap_sum_uv - delta1_assumed_uev;

    // Ohmic slope over the top 20% of |bias|.
    double max_abs = 0.0;
    for (double v : iv.bias_uv) max_abs = std::max(max_abs, std::abs(v));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long count = 0;
    for (std::size_t i = 0; i < iv.bias_uv.size(); ++i) {
        if (std::abs(iv.bias_uv[i]) < 0.8 * max_abs) continue;
        sx += iv.bias_uv[i];
        sy += iv.current_na[i];
        sxx += iv.bias_uv[i] * iv.bias_uv[i];
        sxy += iv.bias_uv[i] * iv.current_na[i];
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    if (count < 2 || denom == 0.0) {
        throw InsufficientData("estimate_initial: too few high-bias samples for a slope");
    }
    const double slope = (count * sxy - sx * sy) / denom;
    if (!(slope > 0.0)) throw InsufficientData("estimate_initial: non-positive ohmic slope");
    est.rn_kohm = 1.0 / slope;

    // Transparency from the excess current; saturated first-order steps of
    // the three onset families contribute ~3 * base_scale * D.
    try {
        const auto exc = mar::excess_current(iv, 0.8 * max_abs);
        est.transparency =
            std::clamp(exc.i_exc_na / (3.0 * std::max(mar_base_scale_na, 1e-12)), 0.0, 1.0);
    } catch (const InsufficientData&) {
        est.transparency = 0.0;
    }

    // Current offset: interpolate I at the bias-offset midpoint.
    if (est.v_offset_uv >= iv.bias_uv.front() && est.v_offset_uv <= iv.bias_uv.back()) {
        for (std::size_t i = 1; i < iv.bias_uv.size(); ++i) {
            if (est.v_offset_uv <= iv.bias_uv[i]) {
                const double frac = (est.v_offset_uv - iv.bias_uv[i - 1]) /
                                    (iv.bias_uv[i] - iv.bias_uv[i - 1]);
                est.i_offset_na =
                    iv.current_na[i - 1] + frac * (iv.current_na[i] - iv.current_na[i - 1]);
                break;
            }
        }
    }
    return est;
}

namespace {

/// Objective shared by the simplex search: rms residual of the composite
/// model against the data in the configured space.
class Objective {
  public:
    Objective(const IVCurve& data, const FitConfig& cfg)
        : data_(data), cfg_(cfg) {
        if (cfg.objective == FitConfig::Objective::conductance_space) {
            data_didv_ = fitio::differentiate_iv(data).didv_us;
        }
    }

    double operator()(const std::map<ParamId, double>& params) const {
        CompositeParams cp;
        try {
            cp = composite_from_params(params, cfg_.mar_n_max, cfg_.mar_step_width_uv);
        } catch (const ValidationError& e) {
            throw ModelEvaluationFailure(std::string(e.what()) + " at " + describe(params));
        }
        std::vector<double> model;
        try {
            model = composite_current(cp, data_.bias_uv, cfg_.threads);
        } catch (const std::exception& e) {
            throw ModelEvaluationFailure(std::string(e.what()) + " at " + describe(params));
        }
        double ss = 0.0;
        if (cfg_.objective == FitConfig::Objective::current_space) {
            for (std::size_t i = 0; i < model.size(); ++i) {
                const double r = model[i] - data_.current_na[i];
                ss += r * r;
            }
            return std::sqrt(ss / static_cast<double>(model.size()));
        }
        const auto model_didv =
            fitio::differentiate_iv(IVCurve(data_.bias_uv, std::move(model))).didv_us;
        for (std::size_t i = 0; i < model_didv.size(); ++i) {
            const double r = model_didv[i] - data_didv_[i];
            ss += r * r;
        }
        return std::sqrt(ss / static_cast<double>(model_didv.size()));
    }

    static std::string describe(const std::map<ParamId, double>& params) {
        std::ostringstream out;
        out << "{";
        bool first = true;
        for (const auto& [id, v] : params) {
            if (!first) out << ", ";
            out << param_name(id) << " = " << v;
            first = false;
        }
        out << "}";
        return out.str();
    }

  private:
    const IVCurve& data_;
    const FitConfig& cfg_;
    std::vector<double> data_didv_;
};

struct SimplexOutcome {
    std::vector<double> best_y;
    double best_f = 0.0;
    long evals = 0;
    bool converged = false;
};

/// Nelder-Mead on the unit box; coordinates are clamped into [0, 1] before
/// every model evaluation so bound respect is structural.
template <typename F>
SimplexOutcome nelder_mead(F&& f, const std::vector<double>& start, long budget) {
    const std::size_t n = start.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    auto clamp01 = [](std::vector<double> y) {
        for (double& v : y) v = std::clamp(v, 0.0, 1.0);
        return y;
    };

    SimplexOutcome out;
    std::vector<std::vector<double>> pts;
    std::vector<double> fs;
    pts.push_back(clamp01(start));
    for (std::size_t i = 0; i < n; ++i) {
        auto p = start;
        p[i] += p[i] > 0.9 ? -0.08 : 0.08;
        pts.push_back(clamp01(p));
    }
    for (const auto& p : pts) {
        fs.push_back(f(p));
        ++out.evals;
    }

    std::vector<std::size_t> order(pts.size());
    auto sort_simplex = [&] {
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    };

    while (out.evals + 2 <= budget) {
        sort_simplex();
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];

        // Convergence: both the function spread and simplex size collapsed.
        double spread = fs[worst] - fs[best];
        double diameter = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double lo = 1.0, hi = 0.0;
            for (const auto& p : pts) {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            diameter = std::max(diameter, hi - lo);
        }
        if (spread <= 1e-12 * (1.0 + std::abs(fs[best])) && diameter <= 1e-7) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = centroid[i] + t * (centroid[i] - pts[worst][i]);
            }
            return clamp01(std::move(p));
        };

        auto reflected = blend(alpha);
        const double f_r = f(reflected);
        ++out.evals;
        if (f_r < fs[order[0]]) {
            auto expanded = blend(gamma);
            const double f_e = f(expanded);
            ++out.evals;
            if (f_e < f_r) {
                pts[worst] = std::move(expanded);
                fs[worst] = f_e;
            } else {
                pts[worst] = std::move(reflected);
                fs[worst] = f_r;
            }
            continue;
        }
        if (f_r < fs[second_worst]) {
            pts[worst] = std::move(reflected);
            fs[worst] = f_r;
            continue;
        }
        auto contracted = blend(rho * (f_r < fs[worst] ? 1.0 : -1.0));
        const double f_c = f(contracted);
        ++out.evals;
        if (f_c < std::min(f_r, fs[worst])) {
            pts[worst] = std::move(contracted);
            fs[worst] = f_c;
            continue;
        }
        // Shrink toward the best vertex.
        bool budget_hit = false;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (k == best) continue;
            if (out.evals >= budget) {
                budget_hit = true;
                break;
            }
            for (std::size_t i = 0; i < n; ++i) {
                pts[k][i] = pts[best][i] + sigma * (pts[k][i] - pts[best][i]);
            }
            fs[k] = f(pts[k]);
            ++out.evals;
        }
        if (budget_hit) break;
    }

    sort_simplex();
    out.best_y = pts[order.front()];
    out.best_f = fs[order.front()];
    return out;
}

}  // namespace

FitResult fit_iv(const IVCurve& data, const FitConfig& cfg) {
    cfg.validate();
    {
        auto violations = validate_iv(data);
        if (!violations.empty()) throw ValidationError("fit_iv: " + violations.front());
    }

    // Resolved parameter map: defaults, then explicit fixed assignments.
    std::map<ParamId, double> base;
    for (const auto& p : kParams) base[p.id] = p.default_value;
    for (const auto& [id, v] : cfg.fixed) base[id] = v;

    const Objective objective(data, cfg);
    const std::size_t n_free = cfg.free_params.size();

    auto to_params = [&](const std::vector<double>& y) {
        std::map<ParamId, double> params = base;
        for (std::size_t i = 0; i < n_free; ++i) {
            const Bounds& b = cfg.bounds.at(cfg.free_params[i]);
            params[cfg.free_params[i]] = b.lo + std::clamp(y[i], 0.0, 1.0) * (b.hi - b.lo);
        }
        return params;
    };

    FitResult result;
    if (n_free == 0) {
        result.params = base;
        result.rms = objective(base);
        result.evaluations = 1;
        result.converged = true;
        return result;
    }

    // Seed point: data-driven estimates where available, mid-box otherwise.
    std::map<ParamId, double> seed_values;
    try {
        const auto est = estimate_initial(data, base.at(ParamId::delta1),
                                          base.at(ParamId::mar_base_scale));
        seed_values[ParamId::delta2] = est.delta2_uev;
        seed_values[ParamId::rn] = est.rn_kohm;
        seed_values[ParamId::transparency] = est.transparency;
        seed_values[ParamId::v_offset] = est.v_offset_uv;
        seed_values[ParamId::i_offset] = est.i_offset_na;
    } catch (const std::exception&) {
        // fall through to mid-box starts
    }

    std::vector<double> y0(n_free, 0.5);
    for (std::size_t i = 0; i < n_free; ++i) {
        auto it = seed_values.find(cfg.free_params[i]);
        if (it == seed_values.end()) continue;
        const Bounds& b = cfg.bounds.at(cfg.free_params[i]);
        y0[i] = std::clamp((it->second - b.lo) / (b.hi - b.lo), 0.0, 1.0);
    }

    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> jitter(-0.15, 0.15);

    long total_evals = 0;
    const long per_restart = std::max<long>(cfg.max_evals / cfg.restarts, 2 * (long)n_free + 2);
    std::optional<SimplexOutcome> best;
    auto wrapped = [&](const std::vector<double>& y) { return objective(to_params(y)); };

    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> start = y0;
        if (r > 0) {
            for (double& v : start) v = std::clamp(v + jitter(rng), 0.0, 1.0);
        }
        auto outcome = nelder_mead(wrapped, start, per_restart);
        total_evals += outcome.evals;
        // Strict < keeps the earlier restart on ties.
        if (!best || outcome.best_f < best->best_f) best = std::move(outcome);
    }

    result.params = to_params(best->best_y);
    result.rms = best->best_f;
    result.evaluations = total_evals;
    result.converged = best->converged;

    // Finite-difference curvature diagonal around the optimum (diagnostic).
    for (std::size_t i = 0; i < n_free; ++i) {
        const double h = 0.01;
        const double yc = std::clamp(best->best_y[i], h, 1.0 - h);
        auto y_plus = best->best_y;
        auto y_minus = best->best_y;
        auto y_mid = best->best_y;
        y_plus[i] = yc + h;
        y_minus[i] = yc - h;
        y_mid[i] = yc;
        const double f_plus = wrapped(y_plus);
        const double f_minus = wrapped(y_minus);
        const double f_mid = y_mid == best->best_y ? best->best_f : wrapped(y_mid);
        const Bounds& b = cfg.bounds.at(cfg.free_params[i]);
        const double h_param = h * (b.hi - b.lo);
        result.sensitivity[cfg.free_params[i]] =
            (f_plus - 2.0 * f_mid + f_minus) / (h_param * h_param);
        result.evaluations += y_mid == best->best_y ? 2 : 3;
    }
    return result;
}

std::string report_table(const std::vector<FitResult>& results,
                         const std::vector<std::string>& labels, double delta1_assumed_uev) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-24s %12s %9s %10s %12s\n", "label", "delta2_ueV",
                  "rn_kOhm", "D", "rms");
    out << line;
    out << std::string(70, '-') << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        const std::string label = i < labels.size() ? labels[i] : ("fit_" + std::to_string(i));
        auto get = [&](ParamId id, double fallback) {
            auto it = r.params.find(id);
            return it == r.params.end() ? fallback : it->second;
        };
        std::snprintf(line, sizeof line, "%-24s %12.0f %9.1f %10.4g %12.4g\n", label.c_str(),
                      get(ParamId::delta2, 0.0), get(ParamId::rn, 0.0),
                      get(ParamId::transparency, 0.0), r.rms);
        out << line;
    }
    out << std::string(70, '-') << '\n';
    char footer[96];
    std::snprintf(footer, sizeof footer, "assuming bottom electrode delta1 = %.0f ueV\n",
                  delta1_assumed_uev);
    out << footer;
    return out.str();
}

}  // namespace junctionlab::fitting
