#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(DIELREC_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = ::pclose(pipe);
    const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {exit_code, out};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("dielrec_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int count_lines(const std::string& s) {
    int lines = 0;
    for (char c : s) lines += (c == '\n');
    return lines;
}

} // namespace

TEST_CASE("recoil command reports the canonical-momentum ratio") {
    const RunResult r =
        run_cli("recoil --n-alpha 0.02 --gamma0 1e-6 --omega-m 100 --recoil-scale 1e-9");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["recoil_ratio"].get<double>() == doctest::Approx(1.0201).epsilon(1e-3));
    CHECK(j["n"].get<double>() == doctest::Approx(1.01).epsilon(1e-9));
    CHECK(j["n_squared"].get<double>() == doctest::Approx(1.0201).epsilon(1e-9));
    CHECK(j["n_alpha"].get<double>() == 0.02);
    CHECK(j["oracle"]["abs_error"].get<double>() >= 0.0);
    CHECK(j["oracle"]["subdivisions_used"].get<int>() > 0);
}

TEST_CASE("sweep over the index shift tracks (1 + x/2)^2") {
    const RunResult r = run_cli(
        "sweep --axis n_alpha --values 0,0.01,0.02,0.05 --gamma0 1e-6 --omega-m 100 "
        "--recoil-scale 1e-9");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string header;
    std::getline(in, header);
    CHECK(header == "value,n,recoil_ratio,ledger_total");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        double value = 0, n = 0, ratio = 0, total = 0;
        char comma = 0;
        std::istringstream cells(line);
        cells >> value >> comma >> n >> comma >> ratio >> comma >> total;
        const double expected = (1.0 + 0.5 * value) * (1.0 + 0.5 * value);
        CHECK(ratio == doctest::Approx(expected).epsilon(1e-3));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-2));
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("validate reports the broken dilute condition without failing") {
    const RunResult r = run_cli("validate --density 1 --omega-m 100");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["overall"].get<std::string>() == "warn");
    bool found = false;
    for (const auto& check : j["checks"]) {
        if (check["name"].get<std::string>() == "dilute") {
            found = true;
            CHECK_FALSE(check["pass"].get<bool>());
            CHECK(check["measured"].get<double>() == doctest::Approx(248.05).epsilon(1e-3));
        }
    }
    CHECK(found);
}

TEST_CASE("strict mode turns a regime failure into exit 2") {
    const RunResult r = run_cli("validate --omega-m 2 --strict");
    CHECK(r.exit_code == 2);
    // The report is still emitted alongside the failing status.
    const json j = json::parse(r.output);
    CHECK(j["overall"].get<std::string>() == "fail");

    CHECK(run_cli("recoil --omega-m 2 --strict").exit_code == 2);
    CHECK(run_cli("validate --omega-m 2").exit_code == 0);
}

TEST_CASE("unknown config keys are named and rejected") {
    const auto path = temp_file("bad_key.cfg");
    {
        std::ofstream out(path);
        out << "omega_m = 100\nfoo = 1\n";
    }
    const RunResult r = run_cli("validate --config " + path.string(), true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("foo") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("config file: comments, overrides, and the density conflict") {
    const auto path = temp_file("params.cfg");
    {
        std::ofstream out(path);
        out << "# reference point\n";
        out << "omega_m = 50\n";
        out << "gamma0 = 1e-6   # narrow line\n";
        out << "n_alpha = 0.02\n";
    }

    // Flag overrides the file value.
    const RunResult r = run_cli("validate --config " + path.string() + " --omega-m 100");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    for (const auto& check : j["checks"]) {
        if (check["name"].get<std::string>() == "far_detuned") {
            CHECK(check["measured"].get<double>() == 100.0);
        }
    }

    // n_alpha from the file conflicts with --density on the command line.
    const RunResult conflict = run_cli("recoil --config " + path.string() + " --density 1");
    CHECK(conflict.exit_code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("flag-level density / n-alpha conflict is a usage error") {
    const RunResult r = run_cli("recoil --density 1 --n-alpha 0.02", true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("numerical failures exit with code 3") {
    // N*alpha far beyond the dilute-index guard.
    CHECK(run_cli("recoil --n-alpha 0.9").exit_code == 3);
}

TEST_CASE("spectrum: mandatory header, 2001 points, LF endings") {
    const RunResult r = run_cli("spectrum --n-alpha 0.02");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("omega,rho,rot_ratio,anti_ratio\n", 0) == 0);
    CHECK(count_lines(r.output) == 2002);
    CHECK(r.output.find('\r') == std::string::npos);

    // --out writes the same bytes to a file.
    const auto path = temp_file("spectrum.csv");
    const RunResult f = run_cli("spectrum --n-alpha 0.02 --out " + path.string());
    REQUIRE(f.exit_code == 0);
    CHECK(slurp(path) == r.output);
    std::filesystem::remove(path);
}

TEST_CASE("format is fixed per command") {
    CHECK(run_cli("spectrum --format json").exit_code == 1);
    CHECK(run_cli("recoil --format csv").exit_code == 1);
    CHECK(run_cli("recoil --format json").exit_code == 0);
}

TEST_CASE("numbers round-trip through their decimal representation") {
    const RunResult r = run_cli("recoil --n-alpha 0.02");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    // Re-serializing the parsed ratio must reproduce the same double.
    const double ratio = j["recoil_ratio"].get<double>();
    std::ostringstream os;
    os.precision(17);
    os << ratio;
    CHECK(std::stod(os.str()) == ratio);
}

TEST_CASE("every command is byte-deterministic across repeat runs") {
    const std::array<const char*, 6> commands = {
        "validate --n-alpha 0.02",
        "spectrum --n-alpha 0.02",
        "recoil --n-alpha 0.02",
        "ledger --n-alpha 0.02",
        "oracle --n-alpha 0.02",
        "sweep --axis n_alpha --values 0,0.01,0.02,0.05",
    };
    for (const char* cmd : commands) {
        const RunResult a = run_cli(cmd);
        const RunResult b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
}

TEST_CASE("sweep rejects an unknown axis") {
    CHECK(run_cli("sweep --axis bogus --values 1,2", true).exit_code == 1);
    CHECK(run_cli("sweep --axis n_alpha --values 0.01,zzz", true).exit_code == 1);
}

TEST_CASE("quadrature knobs are honored") {
    // Loosening the window below its floor is a configuration error.
    CHECK(run_cli("oracle --quad.window 5").exit_code == 1);
    CHECK(run_cli("oracle --quad.rtol 1").exit_code == 1);

    // Turning the tail correction off visibly shrinks the normalization.
    const RunResult with_tail = run_cli("oracle --n-alpha 0.02 --quad.tail on");
    const RunResult without = run_cli("oracle --n-alpha 0.02 --quad.tail off");
    REQUIRE(with_tail.exit_code == 0);
    REQUIRE(without.exit_code == 0);
    const double a = json::parse(with_tail.output)["normalization"]["quadrature"].get<double>();
    const double b = json::parse(without.output)["normalization"]["quadrature"].get<double>();
    CHECK(std::abs(a - 1.0) < 1e-6);
    CHECK(b < a);
    CHECK(std::abs(b - 1.0) < 1e-3);
}

TEST_CASE("help is available and exits cleanly") {
    CHECK(run_cli("--help", true).exit_code == 0);
    CHECK(run_cli("recoil --help", true).exit_code == 0);
}
