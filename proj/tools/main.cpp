#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"
#include "dielrec/errors.hpp"

namespace {

void add_common_options(CLI::App* sub, dielrec::app::CliOptions& opt) {
    sub->add_option("--config", opt.config_path, "flat `key = value` parameter file");
    sub->add_option("--omega-m", opt.flags.omega_m, "medium transition frequency [omega0]");
    sub->add_option("--gamma0", opt.flags.gamma0, "vacuum decay rate of the emitter [omega0]");
    sub->add_option("--recoil-scale", opt.flags.recoil_scale,
                    "single-photon recoil frequency over omega0");
    auto* density = sub->add_option("--density", opt.flags.density,
                                    "medium number density [(omega0/c)^3]");
    auto* n_alpha = sub->add_option("--n-alpha", opt.flags.n_alpha,
                                    "target N*alpha product (implies the density)");
    density->excludes(n_alpha);
    n_alpha->excludes(density);
    sub->add_flag("--strict", opt.strict_flag, "treat regime warnings as failures");
    sub->add_option("--out", opt.out_path, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "output format; fixed per command")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--quad.window", opt.quad.window_half_width,
                    "integration half-window in line widths")
        ->capture_default_str();
    sub->add_option("--quad.rtol", opt.quad.rel_tol, "integration relative tolerance")
        ->capture_default_str();
    sub->add_option("--quad.tail", opt.quad_tail, "analytic Lorentzian tail correction")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    sub->add_option("--frozen-gamma", opt.frozen_gamma,
                    "pin the decay rate at the line center inside the lineshape")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"photon recoil of an emitter in a dilute dielectric: dressed line, "
                 "medium excitation, energy ledger and recoil statistics",
                 "dielrec"};
    cli.require_subcommand(1);

    dielrec::app::CliOptions opt;

    CLI::App* validate = cli.add_subcommand("validate", "regime diagnostics as JSON");
    CLI::App* spectrum =
        cli.add_subcommand("spectrum", "photon line and excitation ratios as CSV");
    CLI::App* recoil = cli.add_subcommand("recoil", "recoil statistics as JSON");
    CLI::App* ledger = cli.add_subcommand("ledger", "three-term energy ledger as JSON");
    CLI::App* sweep = cli.add_subcommand("sweep", "one-axis parameter sweep as CSV");
    CLI::App* oracle =
        cli.add_subcommand("oracle", "closed form vs quadrature for the line moments");

    for (CLI::App* sub : {validate, spectrum, recoil, ledger, sweep, oracle}) {
        add_common_options(sub, opt);
    }
    sweep->add_option("--axis", opt.sweep_axis,
                      "swept parameter: n_alpha, gamma0, omega_m or recoil_scale")
        ->required();
    sweep->add_option("--values", opt.sweep_values, "comma-separated sweep values")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 1;
    }

    dielrec::app::Command cmd;
    if (validate->parsed()) {
        cmd = dielrec::app::Command::Validate;
    } else if (spectrum->parsed()) {
        cmd = dielrec::app::Command::Spectrum;
    } else if (recoil->parsed()) {
        cmd = dielrec::app::Command::Recoil;
    } else if (ledger->parsed()) {
        cmd = dielrec::app::Command::Ledger;
    } else if (sweep->parsed()) {
        cmd = dielrec::app::Command::Sweep;
    } else {
        cmd = dielrec::app::Command::Oracle;
    }

    try {
        return dielrec::app::run_command(cmd, opt);
    } catch (const dielrec::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const dielrec::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
