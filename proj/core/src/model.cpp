#include "dielrec/model.hpp"

#include <cmath>
#include <numbers>

namespace dielrec {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidParameter(std::string(name) + " must be finite");
    }
}

} // namespace

double mu_sq_from_gamma0(double gamma0) {
    if (!std::isfinite(gamma0) || gamma0 <= 0.0) {
        throw InvalidParameter("gamma0 must be positive and finite");
    }
    return 1.5 * gamma0;
}

ModelParams ModelParams::make(double omega_m, double gamma0, double recoil_scale,
                              double density, bool strict) {
    require_finite(omega_m, "omega_m");
    require_finite(gamma0, "gamma0");
    require_finite(recoil_scale, "recoil_scale");
    require_finite(density, "density");

    if (omega_m <= 1.0) {
        throw InvalidParameter("omega_m must exceed 1 (medium above the emitter line)");
    }
    if (gamma0 <= 0.0 || gamma0 >= 1.0) {
        throw InvalidParameter("gamma0 must lie in (0, 1)");
    }
    if (recoil_scale < 0.0) {
        throw InvalidParameter("recoil_scale must be non-negative");
    }
    if (density < 0.0) {
        throw InvalidParameter("density must be non-negative");
    }

    ModelParams p;
    p.omega_m = omega_m;
    p.gamma0 = gamma0;
    p.recoil_scale = recoil_scale;
    p.density = density;
    p.mu_sq = mu_sq_from_gamma0(gamma0);
    p.strict = strict;
    return p;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Warn: return "warn";
        case Verdict::Fail: return "fail";
    }
    return "fail";
}

ValidationReport validate(const ModelParams& params) {
    require_finite(params.omega_m, "omega_m");
    require_finite(params.gamma0, "gamma0");
    require_finite(params.recoil_scale, "recoil_scale");
    require_finite(params.density, "density");
    require_finite(params.mu_sq, "mu_sq");
    if (params.gamma0 < 0.0 || params.recoil_scale < 0.0 || params.density < 0.0 ||
        params.omega_m < 0.0 || params.mu_sq < 0.0) {
        throw InvalidParameter("model parameters must be non-negative");
    }

    constexpr double lambda0_cubed = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

    ValidationReport report;
    const double atoms_per_cell = params.density * lambda0_cubed;
    report.checks.push_back({"dilute", atoms_per_cell < 1.0, atoms_per_cell, 1.0});
    report.checks.push_back({"far_detuned", params.omega_m >= 10.0, params.omega_m, 10.0});
    report.checks.push_back({"narrow_line", params.gamma0 <= 1e-3, params.gamma0, 1e-3});
    report.checks.push_back({"small_recoil", params.recoil_scale <= 1e-3, params.recoil_scale, 1e-3});

    bool any_failed = false;
    for (const ValidationCheck& c : report.checks) {
        any_failed = any_failed || !c.passed;
    }
    report.overall = !any_failed ? Verdict::Pass
                                 : (params.strict ? Verdict::Fail : Verdict::Warn);
    return report;
}

} // namespace dielrec
