#pragma once

#include "dielrec/medium.hpp"
#include "dielrec/model.hpp"
#include "dielrec/quadrature.hpp"
#include "dielrec/spectral.hpp"

namespace dielrec {

/// One entry of the energy bookkeeping: the leading-order closed form next
/// to its brute-force value and their absolute difference.
struct EnergyTerm {
    double closed_form;
    double quadrature;
    double abs_error;
};

/// Decomposition of the initial excitation energy:
///   field        ~ 1 + N*alpha/2   (first moment of the photon line)
///   medium       ~ N*alpha/2       (rotating + anti-rotating excitations)
///   interaction  ~ -N*alpha        (field / excited-atom cross term)
/// Their sum returns to one up to O((N*alpha)^2): the in-medium frequency
/// shift of the photon is paid for by the medium terms.
struct EnergyLedger {
    EnergyTerm field;
    EnergyTerm medium;
    EnergyTerm interaction;
    EnergyTerm total;
};

struct RecoilStats {
    double mean_recoil_energy;      ///< recoil_scale * <omega^2> [omega0]
    double mean_momentum_magnitude; ///< sqrt(<omega^2>) [omega0/c]
    double recoil_ratio;            ///< mean recoil over the vacuum recoil, -> n^2
};

/// Line normalization: closed form is exactly one; the quadrature side
/// reports what the windowed integral actually produced.
OracleReport total_photon_probability(const SpectralDensity& line, const QuadratureSpec& quad);

/// First moment of the line; closed form is the center n*(1 - n^2*recoil_scale).
OracleReport mean_photon_frequency(const SpectralDensity& line, const QuadratureSpec& quad);

/// Mean recoil kinetic energy recoil_scale*<omega^2>; closed form freezes
/// the moment at the center, recoil_scale*center^2.
OracleReport mean_recoil_energy(const SpectralDensity& line, const ModelParams& params,
                                const QuadratureSpec& quad);

/// Recoil summary built from the quadrature second moment. The momentum
/// expectation vanishes by isotropy; only magnitudes are reported.
RecoilStats recoil_stats(const SpectralDensity& line, const ModelParams& params,
                         const QuadratureSpec& quad);

/// Three-term energy ledger. The interaction entry is evaluated at the line
/// center on both sides (the residual line integral differs at O(gamma0)).
EnergyLedger energy_ledger(const ModelParams& params, const MediumResponse& response,
                           const SpectralDensity& line, const QuadratureSpec& quad);

} // namespace dielrec
