#include "junctionlab/types.hpp"

#include <cmath>
#include <utility>

#include "junctionlab/errors.hpp"

namespace junctionlab {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw ValidationError(msg);
}

std::vector<std::string> check_trace(const std::vector<double>& bias,
                                     const std::vector<double>& signal,
                                     const char* signal_name) {
    std::vector<std::string> violations;
    if (bias.size() != signal.size()) {
        violations.push_back("length mismatch: " + std::to_string(bias.size()) + " bias vs " +
                             std::to_string(signal.size()) + " " + signal_name + " samples");
    }
    for (std::size_t i = 0; i + 1 < bias.size(); ++i) {
        if (!(bias[i] < bias[i + 1])) {
            violations.push_back("bias not strictly increasing at index " + std::to_string(i + 1));
        }
    }
    for (std::size_t i = 0; i < bias.size(); ++i) {
        if (!std::isfinite(bias[i])) {
            violations.push_back("non-finite bias sample at index " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < signal.size(); ++i) {
        if (!std::isfinite(signal[i])) {
            violations.push_back(std::string("non-finite ") + signal_name + " sample at index " +
                                 std::to_string(i));
        }
    }
    return violations;
}

}  // namespace

Electrode::Electrode(double gap0, double dynes, double n0, double thickness)
    : gap0_uev(gap0), dynes_uev(dynes), n0_per_uev_um3(n0), thickness_nm(thickness) {
    require(std::isfinite(gap0) && gap0 >= 0.0, "Electrode: gap0 must be >= 0");
    require(std::isfinite(dynes) && dynes >= 0.0, "Electrode: dynes must be >= 0");
    require(std::isfinite(n0) && n0 > 0.0, "Electrode: n0 must be > 0");
    require(std::isfinite(thickness) && thickness > 0.0, "Electrode: thickness must be > 0");
}

Junction::Junction(Electrode e1, Electrode e2, double rn, double d)
    : electrode1(std::move(e1)), electrode2(std::move(e2)), rn_kohm(rn), transparency(d) {
    require(std::isfinite(rn) && rn > 0.0, "Junction: rn must be > 0");
    require(std::isfinite(d) && d >= 0.0 && d <= 1.0, "Junction: transparency must be in [0, 1]");
}

QuasiparticleState::QuasiparticleState(double t_k, double n_neq, double n1, double n2)
    : temperature_k(t_k), n_neq_total_um3(n_neq), n1_um3(n1), n2_um3(n2) {
    require(std::isfinite(t_k) && t_k > 0.0, "QuasiparticleState: temperature must be > 0");
    require(std::isfinite(n_neq) && n_neq >= 0.0, "QuasiparticleState: n_neq_total must be >= 0");
    require(std::isfinite(n1) && n1 >= 0.0, "QuasiparticleState: n1 must be >= 0");
    require(std::isfinite(n2) && n2 >= 0.0, "QuasiparticleState: n2 must be >= 0");
}

TransmonParams::TransmonParams(double ec, double fge) : ec_uev(ec), fge_ghz(fge) {
    require(std::isfinite(ec) && ec > 0.0, "TransmonParams: ec must be > 0");
    require(std::isfinite(fge) && fge > 0.0, "TransmonParams: fge must be > 0");
}

IVCurve::IVCurve(std::vector<double> bias, std::vector<double> current, std::string lab)
    : bias_uv(std::move(bias)), current_na(std::move(current)), label(std::move(lab)) {
    auto violations = validate_iv(*this);
    if (!violations.empty()) throw ValidationError("IVCurve: " + violations.front());
}

ConductanceCurve::ConductanceCurve(std::vector<double> bias, std::vector<double> didv,
                                   std::string lab)
    : bias_uv(std::move(bias)), didv_us(std::move(didv)), label(std::move(lab)) {
    auto violations = validate_conductance(*this);
    if (!violations.empty()) throw ValidationError("ConductanceCurve: " + violations.front());
}

std::vector<std::string> validate_iv(const IVCurve& curve) {
    return check_trace(curve.bias_uv, curve.current_na, "current");
}

std::vector<std::string> validate_conductance(const ConductanceCurve& curve) {
    return check_trace(curve.bias_uv, curve.didv_us, "didv");
}

}  // namespace junctionlab
