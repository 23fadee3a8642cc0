#include "dielrec/medium.hpp"

#include <cmath>
#include <numbers>

namespace dielrec {

using std::numbers::pi;

double recoil_frequency(const ModelParams& params, double omega_k) {
    return params.recoil_scale * omega_k * omega_k;
}

double inverse_detuning(double energy, double omega_k, double omega_r,
                        const ModelParams& params) {
    const double rotating = energy - omega_r - params.omega_m;
    const double anti_rotating = rotating - 2.0 * omega_k;
    if (std::abs(rotating) < kResonanceGuard || std::abs(anti_rotating) < kResonanceGuard) {
        throw MediumResonance("detuning denominator vanished; mode sits on the medium resonance");
    }
    return 1.0 / rotating + 1.0 / anti_rotating;
}

double polarizability(double energy, double omega_k, const ModelParams& params) {
    const double omega_r = recoil_frequency(params, omega_k);
    return -4.0 * pi * params.mu_sq * inverse_detuning(energy, omega_k, omega_r, params);
}

double refractive_index(const ModelParams& params, double alpha) {
    const double n_alpha = params.density * alpha;
    if (!(n_alpha < 0.5)) {
        throw RegimeViolation("N*alpha >= 0.5: outside the dilute-index regime");
    }
    return 1.0 + 0.5 * n_alpha;
}

double self_energy(double energy, double omega_k, const ModelParams& params) {
    return -0.5 * params.density * polarizability(energy, omega_k, params) * omega_k;
}

double self_energy_coupling_form(double energy, double omega_k, const ModelParams& params) {
    const double omega_r = recoil_frequency(params, omega_k);
    const double mode_coupling_sq = 2.0 * pi * omega_k; // V*|g_k|^2
    return params.density * mode_coupling_sq * params.mu_sq *
           inverse_detuning(energy, omega_k, omega_r, params);
}

MediumResponse self_consistent_pole(double omega_k, const ModelParams& params) {
    const double omega_r = recoil_frequency(params, omega_k);

    double energy = omega_k;
    int iterations = 0;
    bool converged = false;
    while (iterations < kPoleMaxIterations) {
        ++iterations;
        const double shift = 0.5 * params.density * polarizability(energy, omega_k, params);
        const double next = omega_r + (1.0 - shift) * omega_k;
        converged = std::abs(next - energy) <= kPoleRelTol * std::max(1.0, std::abs(next));
        energy = next;
        if (converged) break;
    }
    if (!converged) {
        throw ConvergenceFailure("propagator pole iteration did not settle in 20 steps");
    }

    MediumResponse response;
    response.alpha = polarizability(energy, omega_k, params);
    response.n = refractive_index(params, response.alpha);
    response.pole_energy = energy;
    response.iterations = iterations;
    return response;
}

double density_from_n_alpha(double n_alpha, const ModelParams& base) {
    if (!std::isfinite(n_alpha) || n_alpha < 0.0) {
        throw InvalidParameter("n_alpha must be non-negative and finite");
    }
    if (n_alpha == 0.0) return 0.0;
    // With the product pinned, the pole of the central mode is explicit.
    const double pole = recoil_frequency(base, 1.0) + (1.0 - 0.5 * n_alpha);
    return n_alpha / polarizability(pole, 1.0, base);
}

} // namespace dielrec
