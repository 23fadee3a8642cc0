#pragma once

#include <optional>
#include <string>

namespace dielrec {

/// Parameters as they arrive from a config file or command line, before
/// defaults are applied. density and n_alpha are mutually exclusive ways of
/// fixing the medium strength; the conflict is checked at resolution time.
struct RawConfig {
    std::optional<double> omega_m;
    std::optional<double> gamma0;
    std::optional<double> recoil_scale;
    std::optional<double> density;
    std::optional<double> n_alpha;
    std::optional<bool> strict;
};

/// Parse flat `key = value` text. `#` starts a comment, blank lines are
/// skipped, later assignments win. Accepted keys are exactly omega_m,
/// gamma0, recoil_scale, density, n_alpha and strict; anything else throws
/// InvalidParameter naming the key.
RawConfig parse_config_text(const std::string& text);

RawConfig load_config_file(const std::string& path);

/// Overlay `top` onto `base`: any field set in `top` replaces the base value.
RawConfig merge_config(RawConfig base, const RawConfig& top);

} // namespace dielrec
