#include "app.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "dielrec/errors.hpp"
#include "dielrec/medium.hpp"
#include "dielrec/model.hpp"
#include "dielrec/observables.hpp"
#include "dielrec/spectral.hpp"
#include "dielrec/textio.hpp"

namespace dielrec::app {

namespace {

constexpr double kDefaultOmegaM = 100.0;
constexpr double kDefaultGamma0 = 1e-6;
constexpr double kDefaultRecoilScale = 1e-9;

struct Materialized {
    ModelParams params;
    std::optional<double> n_alpha_input; // echoed in reports when given
};

Materialized materialize(const RawConfig& cfg) {
    if (cfg.density && cfg.n_alpha) {
        throw InvalidParameter("density and n_alpha are mutually exclusive; give only one");
    }
    ModelParams params = ModelParams::make(
        cfg.omega_m.value_or(kDefaultOmegaM), cfg.gamma0.value_or(kDefaultGamma0),
        cfg.recoil_scale.value_or(kDefaultRecoilScale), cfg.density.value_or(0.0),
        cfg.strict.value_or(false));
    if (cfg.n_alpha) {
        const double density = density_from_n_alpha(*cfg.n_alpha, params);
        params = ModelParams::make(params.omega_m, params.gamma0, params.recoil_scale,
                                   density, params.strict);
        return {params, cfg.n_alpha};
    }
    return {params, std::nullopt};
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw InvalidParameter("cannot open output file: " + out_path);
    }
    out << content;
}

std::string render_oracle(const OracleReport& r, const std::string& pad) {
    std::ostringstream os;
    os << "{\n";
    os << pad << "  \"closed_form\": " << format_g17(r.closed_form) << ",\n";
    os << pad << "  \"quadrature\": " << format_g17(r.quadrature) << ",\n";
    os << pad << "  \"abs_error\": " << format_g17(r.abs_error) << ",\n";
    os << pad << "  \"subdivisions_used\": " << r.subdivisions_used << "\n";
    os << pad << "}";
    return os.str();
}

std::string render_validation(const ValidationReport& report) {
    std::ostringstream os;
    os << "{\n  \"checks\": [\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const ValidationCheck& c = report.checks[i];
        os << "    {\"name\": \"" << json_escape(c.name) << "\", \"pass\": "
           << (c.passed ? "true" : "false") << ", \"measured\": " << format_g17(c.measured)
           << ", \"threshold\": " << format_g17(c.threshold) << "}"
           << (i + 1 < report.checks.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"overall\": \"" << to_string(report.overall) << "\"\n}\n";
    return os.str();
}

std::string render_energy_term(const EnergyTerm& t, const std::string& pad) {
    std::ostringstream os;
    os << "{\n";
    os << pad << "  \"closed_form\": " << format_g17(t.closed_form) << ",\n";
    os << pad << "  \"quadrature\": " << format_g17(t.quadrature) << ",\n";
    os << pad << "  \"abs_error\": " << format_g17(t.abs_error) << "\n";
    os << pad << "}";
    return os.str();
}

struct Pipeline {
    ModelParams params;
    MediumResponse response;
    SpectralDensity line;
};

Pipeline build_pipeline(const ModelParams& params, const SpectralOptions& sopts) {
    const MediumResponse response = self_consistent_pole(1.0, params);
    return {params, response, photon_density(params, response, sopts)};
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("sweep value is not a number: " + item);
        }
        if (used != item.size()) {
            throw InvalidParameter("sweep value is not a number: " + item);
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw InvalidParameter("sweep needs at least one value");
    }
    return values;
}

std::string sweep_row(RawConfig cfg, const std::string& axis, double value,
                      const QuadratureSpec& quad, const SpectralOptions& sopts) {
    if (axis == "n_alpha") {
        cfg.n_alpha = value;
        cfg.density.reset();
    } else if (axis == "gamma0") {
        cfg.gamma0 = value;
    } else if (axis == "omega_m") {
        cfg.omega_m = value;
    } else if (axis == "recoil_scale") {
        cfg.recoil_scale = value;
    } else {
        throw InvalidParameter("unknown sweep axis: " + axis);
    }
    const Materialized m = materialize(cfg);
    const Pipeline pipe = build_pipeline(m.params, sopts);
    const RecoilStats stats = recoil_stats(pipe.line, pipe.params, quad);
    const EnergyLedger ledger = energy_ledger(pipe.params, pipe.response, pipe.line, quad);

    std::ostringstream os;
    os << format_g17(value) << ',' << format_g17(pipe.response.n) << ','
       << format_g17(stats.recoil_ratio) << ',' << format_g17(ledger.total.quadrature) << '\n';
    return os.str();
}

} // namespace

int run_command(Command cmd, const CliOptions& opt) {
    const char* fixed_format = (cmd == Command::Spectrum || cmd == Command::Sweep) ? "csv" : "json";
    if (!opt.format.empty() && opt.format != fixed_format) {
        throw InvalidParameter(std::string("this command emits ") + fixed_format +
                               "; --format " + opt.format + " conflicts with that");
    }

    QuadratureSpec quad = opt.quad;
    quad.tail_correction = (opt.quad_tail == "on");
    quad.check();

    SpectralOptions sopts;
    sopts.frozen_gamma = (opt.frozen_gamma == "on");

    RawConfig cfg;
    if (!opt.config_path.empty()) {
        cfg = load_config_file(opt.config_path);
    }
    cfg = merge_config(cfg, opt.flags);
    if (opt.strict_flag) cfg.strict = true;

    const Materialized m = materialize(cfg);
    const ValidationReport report = validate(m.params);

    if (cmd == Command::Validate) {
        emit(opt.out_path, render_validation(report));
        return (m.params.strict && report.overall == Verdict::Fail) ? 2 : 0;
    }

    if (report.overall == Verdict::Fail) {
        std::cerr << "error: parameters fail regime validation under strict mode\n";
        return 2;
    }
    if (report.overall == Verdict::Warn) {
        std::cerr << "warning: parameters outside the nominal regime:";
        for (const ValidationCheck& c : report.checks) {
            if (!c.passed) std::cerr << ' ' << c.name;
        }
        std::cerr << '\n';
    }

    switch (cmd) {
        case Command::Spectrum: {
            const Pipeline pipe = build_pipeline(m.params, sopts);
            std::ostringstream os;
            os << "omega,rho,rot_ratio,anti_ratio\n";
            constexpr int kPoints = 2001;
            constexpr double kHalfSpanWidths = 10.0;
            for (int i = 0; i < kPoints; ++i) {
                const double t = static_cast<double>(i) / (kPoints - 1);
                const double w =
                    pipe.line.center() + pipe.line.width() * (2.0 * kHalfSpanWidths * t - kHalfSpanWidths);
                const ExcitationRatios r = excitation_ratios(w, pipe.params, pipe.response);
                os << format_g17(w) << ',' << format_g17(pipe.line.rho(w)) << ','
                   << format_g17(r.rot) << ',' << format_g17(r.anti) << '\n';
            }
            emit(opt.out_path, os.str());
            return 0;
        }
        case Command::Recoil: {
            const Pipeline pipe = build_pipeline(m.params, sopts);
            const RecoilStats stats = recoil_stats(pipe.line, pipe.params, quad);
            const OracleReport oracle = mean_recoil_energy(pipe.line, pipe.params, quad);
            const double n = pipe.response.n;
            const double n_alpha = m.n_alpha_input ? *m.n_alpha_input : 2.0 * (n - 1.0);
            std::ostringstream os;
            os << "{\n";
            os << "  \"recoil_ratio\": " << format_g17(stats.recoil_ratio) << ",\n";
            os << "  \"n\": " << format_g17(n) << ",\n";
            os << "  \"n_squared\": " << format_g17(n * n) << ",\n";
            os << "  \"gamma0\": " << format_g17(pipe.params.gamma0) << ",\n";
            os << "  \"n_alpha\": " << format_g17(n_alpha) << ",\n";
            os << "  \"oracle\": " << render_oracle(oracle, "  ") << "\n";
            os << "}\n";
            emit(opt.out_path, os.str());
            return 0;
        }
        case Command::Ledger: {
            const Pipeline pipe = build_pipeline(m.params, sopts);
            const EnergyLedger ledger = energy_ledger(pipe.params, pipe.response, pipe.line, quad);
            std::ostringstream os;
            os << "{\n";
            os << "  \"field\": " << render_energy_term(ledger.field, "  ") << ",\n";
            os << "  \"medium\": " << render_energy_term(ledger.medium, "  ") << ",\n";
            os << "  \"interaction\": " << render_energy_term(ledger.interaction, "  ") << ",\n";
            os << "  \"total\": " << render_energy_term(ledger.total, "  ") << "\n";
            os << "}\n";
            emit(opt.out_path, os.str());
            return 0;
        }
        case Command::Oracle: {
            const Pipeline pipe = build_pipeline(m.params, sopts);
            const OracleReport norm = total_photon_probability(pipe.line, quad);
            const OracleReport first = mean_photon_frequency(pipe.line, quad);
            const LineIntegral second_quad = integrate_line(
                [&](double w) { return pipe.line.rho(w) * w * w; }, pipe.line.center(),
                pipe.line.width(), quad);
            const OracleReport second = make_oracle_report(
                ww_pole_value(2, pipe.line.center(), pipe.line.width()), second_quad);
            std::ostringstream os;
            os << "{\n";
            os << "  \"normalization\": " << render_oracle(norm, "  ") << ",\n";
            os << "  \"first_moment\": " << render_oracle(first, "  ") << ",\n";
            os << "  \"second_moment\": " << render_oracle(second, "  ") << "\n";
            os << "}\n";
            emit(opt.out_path, os.str());
            return 0;
        }
        case Command::Sweep: {
            static const std::vector<std::string> kAxes = {"n_alpha", "gamma0", "omega_m",
                                                           "recoil_scale"};
            bool known = false;
            for (const std::string& a : kAxes) known = known || (a == opt.sweep_axis);
            if (!known) {
                throw InvalidParameter("sweep axis must be one of n_alpha, gamma0, omega_m, "
                                       "recoil_scale; got: " +
                                       opt.sweep_axis);
            }
            const std::vector<double> values = parse_values(opt.sweep_values);

            // Points are independent; compute them concurrently but emit in
            // the order given.
            std::vector<std::string> rows(values.size());
            if (values.size() > 1) {
                std::vector<std::future<std::string>> futures;
                futures.reserve(values.size());
                for (double v : values) {
                    futures.push_back(std::async(std::launch::async, sweep_row, cfg,
                                                 opt.sweep_axis, v, quad, sopts));
                }
                for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
            } else {
                rows[0] = sweep_row(cfg, opt.sweep_axis, values[0], quad, sopts);
            }

            std::ostringstream os;
            os << "value,n,recoil_ratio,ledger_total\n";
            for (const std::string& row : rows) os << row;
            emit(opt.out_path, os.str());
            return 0;
        }
        default:
            throw InvalidParameter("unhandled command");
    }
}

} // namespace dielrec::app
