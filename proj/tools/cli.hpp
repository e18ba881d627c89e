#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ulp::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNoBound = 2,
    kUnverified = 3,
    kCheckFailed = 4,
};

/// Solver and experiment defaults shared by every subcommand.
struct RunConfig {
    int grid_resolution = 0;  // 0: per-n default
    double slack = 1e-7;
    int verify_resolution_factor = 4;
    int max_rounds = 20;
    std::uint64_t seed = 1;
};

/// Values given explicitly on the command line; unset fields fall through.
struct ConfigOverrides {
    std::optional<int> grid_resolution;
    std::optional<double> slack;
    std::optional<int> verify_resolution_factor;
    std::optional<int> max_rounds;
    std::optional<std::uint64_t> seed;
};

/// Parses `key = value` lines ('#' starts a comment) on top of `base`.
/// Throws std::invalid_argument on unknown keys or malformed values.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
RunConfig apply_overrides(RunConfig cfg, const ConfigOverrides& o);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ulp::cli
