#pragma once

#include <string>
#include <vector>

#include "dielrec/errors.hpp"

namespace dielrec {

// Everything in this library works in natural units: hbar = c = 1 and the
// emitter transition frequency omega0 = 1. Frequencies and energies are in
// units of omega0, densities in (omega0/c)^3, lengths in c/omega0. The
// Gaussian field convention eps0 = 1/(4*pi) is used throughout, under which
// the mode coupling satisfies V*|g_k|^2 = 2*pi*omega_k and the free-space
// decay rate is gamma = (2/3)*mu^2*omega^3.

/// Physical inputs for one emitter embedded in a dilute J=0 -> J=1 medium.
/// Immutable after construction; build through make() so the invariants and
/// the derived dipole strength are enforced.
struct ModelParams {
    double omega_m;      ///< medium transition frequency [omega0]
    double gamma0;       ///< vacuum decay rate of the emitter [omega0]
    double recoil_scale; ///< single-photon recoil frequency over omega0
    double density;      ///< medium number density [(omega0/c)^3]
    double mu_sq;        ///< squared reduced dipole element, (3/2)*gamma0
    bool strict = false; ///< escalate regime warnings to hard failures

    static ModelParams make(double omega_m, double gamma0, double recoil_scale,
                            double density, bool strict = false);
};

/// Invert gamma = (2/3)*mu^2*omega^3 at omega = 1 for the dipole strength.
double mu_sq_from_gamma0(double gamma0);

enum class Verdict { Pass, Warn, Fail };

const char* to_string(Verdict v);

struct ValidationCheck {
    std::string name;
    bool passed;
    double measured;
    double threshold;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    Verdict overall;
};

/// Regime diagnostics. Four checks, always in this order:
///   dilute        N*(2*pi)^3 < 1          (less than one atom per lambda0^3)
///   far_detuned   omega_m >= 10
///   narrow_line   gamma0 <= 1e-3
///   small_recoil  recoil_scale <= 1e-3
/// overall is Fail only when strict and some check failed, Warn when some
/// check failed non-strict, Pass otherwise. The thresholds are advisory
/// defaults; computation is never blocked by a Warn.
ValidationReport validate(const ModelParams& params);

} // namespace dielrec
