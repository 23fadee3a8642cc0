#include "dielrec/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dielrec/errors.hpp"

namespace dielrec {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw InvalidParameter("config value for '" + key + "' is not a number: " + value);
    }
    if (used != value.size()) {
        throw InvalidParameter("config value for '" + key + "' is not a number: " + value);
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw InvalidParameter("config value for '" + key + "' is not a boolean: " + value);
}

} // namespace

RawConfig parse_config_text(const std::string& text) {
    RawConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidParameter("malformed config line " + std::to_string(line_no) +
                                   ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "omega_m") {
            cfg.omega_m = parse_double(key, value);
        } else if (key == "gamma0") {
            cfg.gamma0 = parse_double(key, value);
        } else if (key == "recoil_scale") {
            cfg.recoil_scale = parse_double(key, value);
        } else if (key == "density") {
            cfg.density = parse_double(key, value);
        } else if (key == "n_alpha") {
            cfg.n_alpha = parse_double(key, value);
        } else if (key == "strict") {
            cfg.strict = parse_bool(key, value);
        } else {
            throw InvalidParameter("unknown config key: " + key);
        }
    }
    return cfg;
}

RawConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameter("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

RawConfig merge_config(RawConfig base, const RawConfig& top) {
    if (top.omega_m) base.omega_m = top.omega_m;
    if (top.gamma0) base.gamma0 = top.gamma0;
    if (top.recoil_scale) base.recoil_scale = top.recoil_scale;
    if (top.density) base.density = top.density;
    if (top.n_alpha) base.n_alpha = top.n_alpha;
    if (top.strict) base.strict = top.strict;
    return base;
}

} // namespace dielrec
