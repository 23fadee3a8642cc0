#include "dielrec/observables.hpp"

#include <cmath>

namespace dielrec {

OracleReport total_photon_probability(const SpectralDensity& line, const QuadratureSpec& quad) {
    const LineIntegral q = integrate_line([&](double w) { return line.rho(w); },
                                          line.center(), line.width(), quad);
    return make_oracle_report(ww_pole_value(0, line.center(), line.width()), q);
}

OracleReport mean_photon_frequency(const SpectralDensity& line, const QuadratureSpec& quad) {
    const LineIntegral q = integrate_line([&](double w) { return line.rho(w) * w; },
                                          line.center(), line.width(), quad);
    return make_oracle_report(ww_pole_value(1, line.center(), line.width()), q);
}

namespace {

LineIntegral second_moment(const SpectralDensity& line, const QuadratureSpec& quad) {
    return integrate_line([&](double w) { return line.rho(w) * w * w; },
                          line.center(), line.width(), quad);
}

} // namespace

OracleReport mean_recoil_energy(const SpectralDensity& line, const ModelParams& params,
                                const QuadratureSpec& quad) {
    LineIntegral q = second_moment(line, quad);
    q.value *= params.recoil_scale;
    q.error_estimate *= params.recoil_scale;
    const double closed = params.recoil_scale * ww_pole_value(2, line.center(), line.width());
    return make_oracle_report(closed, q);
}

RecoilStats recoil_stats(const SpectralDensity& line, const ModelParams& params,
                         const QuadratureSpec& quad) {
    const LineIntegral q = second_moment(line, quad);
    RecoilStats stats;
    stats.mean_recoil_energy = params.recoil_scale * q.value;
    stats.mean_momentum_magnitude = std::sqrt(q.value);
    // Identical to mean_recoil_energy / (recoil_scale * 1^2), but defined
    // for recoil_scale = 0 as well.
    stats.recoil_ratio = q.value;
    return stats;
}

EnergyLedger energy_ledger(const ModelParams& params, const MediumResponse& response,
                           const SpectralDensity& line, const QuadratureSpec& quad) {
    const double n_alpha = 2.0 * (response.n - 1.0);

    EnergyLedger ledger;

    ledger.field.closed_form = response.n; // 1 + N*alpha/2
    ledger.field.quadrature = integrate_line([&](double w) { return line.rho(w) * w; },
                                             line.center(), line.width(), quad)
                                  .value;

    ledger.medium.closed_form = 0.5 * n_alpha;
    ledger.medium.quadrature =
        integrate_line(
            [&](double w) {
                const ExcitationRatios r = excitation_ratios(w, params, response);
                return line.rho(w) *
                       (r.rot * params.omega_m + r.anti * (params.omega_m + 2.0 * w));
            },
            line.center(), line.width(), quad)
            .value;

    ledger.interaction.closed_form = -n_alpha * line.omega_bar();
    const MediumResponse at_center = self_consistent_pole(line.center(), params);
    ledger.interaction.quadrature = -(params.density * at_center.alpha) * line.center();

    ledger.total.closed_form = ledger.field.closed_form + ledger.medium.closed_form +
                               ledger.interaction.closed_form;
    ledger.total.quadrature = ledger.field.quadrature + ledger.medium.quadrature +
                              ledger.interaction.quadrature;

    for (EnergyTerm* term : {&ledger.field, &ledger.medium, &ledger.interaction, &ledger.total}) {
        term->abs_error = std::abs(term->closed_form - term->quadrature);
    }
    return ledger;
}

} // namespace dielrec
