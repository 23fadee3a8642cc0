#pragma once

#include "dielrec/model.hpp"

namespace dielrec {

/// Frequency response of the medium at one photon mode: polarizability at
/// the dressed-propagator pole, the dilute refractive index built from it,
/// and the pole itself.
struct MediumResponse {
    double alpha;       ///< polarizability alpha(E*) [(c/omega0)^3]
    double n;           ///< refractive index, 1 + density*alpha/2
    double pole_energy; ///< E*, real pole of the dressed propagator [omega0]
    int iterations;     ///< fixed-point applications used to locate E*
};

/// Guard on detuning denominators; anything closer to zero than this is
/// treated as a resonance hit and refused.
inline constexpr double kResonanceGuard = 1e-12;

inline constexpr double kPoleRelTol = 1e-12;
inline constexpr int kPoleMaxIterations = 20;

/// Recoil frequency of a photon mode, recoil_scale * omega_k^2.
double recoil_frequency(const ModelParams& params, double omega_k);

/// 1/Delta(E): the rotating plus anti-rotating inverse detuning,
///   1/(E - omega_r - omega_m) + 1/(E - omega_r - omega_m - 2*omega_k).
/// Throws MediumResonance when either denominator is inside the guard.
double inverse_detuning(double energy, double omega_k, double omega_r,
                        const ModelParams& params);

/// Single-atom polarizability alpha(E) = -4*pi*mu^2 / Delta(E), evaluated
/// for the mode omega_k (whose recoil term enters the detuning). Positive
/// below resonance.
double polarizability(double energy, double omega_k, const ModelParams& params);

/// Dilute-limit index n = 1 + density*alpha/2. Refuses N*alpha >= 0.5, where
/// the linearized index stops being meaningful.
double refractive_index(const ModelParams& params, double alpha);

/// Photon self-energy from independent scattering off medium atoms,
/// Sigma(E) = -(1/2) * N * alpha(E) * omega_k.
double self_energy(double energy, double omega_k, const ModelParams& params);

/// The same self-energy assembled from the mode-coupling route,
/// Sigma = N * (V|g_k|^2) * mu^2 / Delta(E) with V|g_k|^2 = 2*pi*omega_k.
/// Kept as an independent algebraic route for consistency checks; it must
/// agree with self_energy() to rounding error.
double self_energy_coupling_form(double energy, double omega_k, const ModelParams& params);

/// Solve E = omega_r + (1 - density*alpha(E)/2) * omega_k by fixed-point
/// iteration from E = omega_k, relative tolerance 1e-12, at most 20
/// applications. The map contracts strongly (correction of order N*alpha),
/// so the budget is generous.
MediumResponse self_consistent_pole(double omega_k, const ModelParams& params);

/// Invert the product N*alpha at the line-center pole for the density that
/// realizes it, so a requested index shift can be fed through the ordinary
/// density pipeline.
double density_from_n_alpha(double n_alpha, const ModelParams& base);

} // namespace dielrec
