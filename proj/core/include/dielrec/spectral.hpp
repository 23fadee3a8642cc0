#pragma once

#include "dielrec/medium.hpp"
#include "dielrec/model.hpp"
#include "dielrec/quadrature.hpp"

namespace dielrec {

/// Evaluation modes for the dressed line. The defaults pin both the index
/// and the decay rate at the line center, which is the convention under
/// which the closed-form moments are exact; the per-mode variants exist for
/// sensitivity studies only.
struct SpectralOptions {
    bool frozen_gamma = true; ///< gamma in the denominator fixed at the center
    bool frozen_n = true;     ///< index fixed at the line-center response
};

/// Normalized frequency distribution of the emitted photon,
///
///   rho(omega) = C * omega^3 / ( [omega/n - omega_bar]^2 + (n*gamma_c)^2 )
///
/// with omega_bar = 1 - n^2*recoil_scale, center = n*omega_bar, gamma_c the
/// decay rate evaluated at the center, and C = gamma_c/(pi*center^3) so the
/// pole integral of rho is exactly one. In omega the line is a tilted
/// Lorentzian of half-width n^2*gamma_c, stored explicitly as width().
class SpectralDensity {
public:
    SpectralDensity(const ModelParams& params, const MediumResponse& response,
                    const SpectralOptions& opts);

    double rho(double omega) const;

    double center() const { return center_; }
    double width() const { return width_; }
    double prefactor() const { return prefactor_; }
    double n() const { return n_; }
    double gamma_center() const { return gamma_c_; }
    double omega_bar() const { return omega_bar_; }

    const ModelParams& params() const { return params_; }
    const MediumResponse& response() const { return response_; }
    const SpectralOptions& options() const { return opts_; }

private:
    ModelParams params_;
    MediumResponse response_;
    SpectralOptions opts_;
    double n_;
    double omega_bar_;
    double center_;
    double gamma_c_;
    double width_;
    double prefactor_;
};

SpectralDensity photon_density(const ModelParams& params, const MediumResponse& response,
                               const SpectralOptions& opts = {});

/// Pointwise ratios of medium-excitation density to photon density. Both
/// channels carry the same angular projector as the photon line, so it
/// cancels and only the detuning denominators survive:
///   rot  = 2*pi*N*mu^2*omega / [ (1 - N*alpha/2)*omega - omega_m ]^2
///   anti = 2*pi*N*mu^2*omega / [ (1 - N*alpha/2)*omega - omega_m - 2*omega ]^2
struct ExcitationRatios {
    double rot;
    double anti;
};

ExcitationRatios excitation_ratios(double omega, const ModelParams& params,
                                   const MediumResponse& response);

struct MediumExcitation {
    double p_rot;
    double p_anti;
};

/// Line-integrated excitation probabilities, rho-weighted over the window.
/// Both come out of order N*alpha * omega/omega_m.
MediumExcitation medium_excitation_probability(const ModelParams& params,
                                               const MediumResponse& response,
                                               const QuadratureSpec& quad);

} // namespace dielrec
