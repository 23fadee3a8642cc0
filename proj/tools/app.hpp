#pragma once

#include <string>

#include "dielrec/config.hpp"
#include "dielrec/quadrature.hpp"

namespace dielrec::app {

enum class Command { Validate, Spectrum, Recoil, Ledger, Sweep, Oracle };

/// Staged command-line state, merged over the config file inside run_command.
struct CliOptions {
    std::string config_path;
    RawConfig flags;
    bool strict_flag = false;
    std::string out_path;
    std::string format; // empty means the command's fixed format
    QuadratureSpec quad;
    std::string quad_tail = "on";
    std::string frozen_gamma = "on";
    std::string sweep_axis;
    std::string sweep_values;
};

/// Exit codes: 0 success, 2 strict-mode validation failure. Configuration
/// errors (InvalidParameter) and numerical failures escape as exceptions for
/// main() to map onto 1 and 3.
int run_command(Command cmd, const CliOptions& opt);

} // namespace dielrec::app
