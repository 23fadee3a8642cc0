#include "dielrec/spectral.hpp"

#include <cmath>
#include <numbers>

namespace dielrec {

using std::numbers::pi;

SpectralDensity::SpectralDensity(const ModelParams& params, const MediumResponse& response,
                                 const SpectralOptions& opts)
    : params_(params), response_(response), opts_(opts) {
    n_ = response.n;
    omega_bar_ = 1.0 - n_ * n_ * params.recoil_scale;
    if (!(omega_bar_ > 0.0)) {
        throw InvalidParameter("recoil shift swallowed the line: n^2*recoil_scale >= 1");
    }
    center_ = n_ * omega_bar_;
    gamma_c_ = params.gamma0 * center_ * center_ * center_;
    width_ = n_ * n_ * gamma_c_;
    // Fixed so the single-pole integral of rho is exactly one; equals
    // gamma_c / (pi * center^3).
    prefactor_ = params.gamma0 / pi;
}

double SpectralDensity::rho(double omega) const {
    const double omega3 = omega * omega * omega;
    double n = n_;
    double omega_bar = omega_bar_;
    if (!opts_.frozen_n) {
        const MediumResponse local = self_consistent_pole(omega, params_);
        n = local.n;
        omega_bar = 1.0 - n * n * params_.recoil_scale;
    }
    const double gamma = opts_.frozen_gamma ? gamma_c_ : params_.gamma0 * omega3;
    const double detune = omega / n - omega_bar;
    return prefactor_ * omega3 / (detune * detune + n * n * gamma * gamma);
}

SpectralDensity photon_density(const ModelParams& params, const MediumResponse& response,
                               const SpectralOptions& opts) {
    return SpectralDensity(params, response, opts);
}

ExcitationRatios excitation_ratios(double omega, const ModelParams& params,
                                   const MediumResponse& response) {
    const double survival = 2.0 - response.n; // 1 - N*alpha/2
    const double d_rot = survival * omega - params.omega_m;
    const double d_anti = d_rot - 2.0 * omega;
    if (std::abs(d_rot) < kResonanceGuard || std::abs(d_anti) < kResonanceGuard) {
        throw MediumResonance("excitation ratio denominator vanished");
    }
    const double strength = 2.0 * pi * params.density * params.mu_sq * omega;
    return {strength / (d_rot * d_rot), strength / (d_anti * d_anti)};
}

MediumExcitation medium_excitation_probability(const ModelParams& params,
                                               const MediumResponse& response,
                                               const QuadratureSpec& quad) {
    const SpectralDensity line = photon_density(params, response);
    const LineIntegral rot = integrate_line(
        [&](double w) { return line.rho(w) * excitation_ratios(w, params, response).rot; },
        line.center(), line.width(), quad);
    const LineIntegral anti = integrate_line(
        [&](double w) { return line.rho(w) * excitation_ratios(w, params, response).anti; },
        line.center(), line.width(), quad);
    return {rot.value, anti.value};
}

} // namespace dielrec
