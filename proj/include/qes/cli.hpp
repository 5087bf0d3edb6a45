#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qes/types.hpp"

namespace qes::cli {

enum class Command { Solve, Check, Verify, Radial, Critique };

enum class OutputFormat { Json, Csv, Text };

struct RunConfig
{
    Command command = Command::Solve;
    Dimension dimension = Dimension::ThreeD;
    double a = 1.0;
    int ell = 0;
    std::optional<int> ell_prime;
    std::optional<double> b;
    std::optional<double> c;
    /// Unset: verify checks both states, radial emits the ground state.
    std::optional<State> state;
    bool normalized = false;
    int samples = 512;
    int grid_n = 4000;
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<double> tolerance;
    /// Explicit excited-state candidate for `verify`.
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> kappa;
    std::optional<double> energy;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
};

enum ExitCode : int {
    Success = 0,
    CheckFailed = 1,
    InvalidOrUnsolvable = 2,
};

struct CliResult
{
    int exit_code = 0;
    /// Text destined for standard output (empty when written to --output).
    std::string out;
    std::string err;
};

/// Parses and runs one invocation; `args` excludes the program name.
CliResult run(const std::vector<std::string>& args);

/// Individual commands on an already-parsed configuration.
CliResult cmd_solve(const RunConfig& cfg);
CliResult cmd_check(const RunConfig& cfg);
CliResult cmd_verify(const RunConfig& cfg);
CliResult cmd_radial(const RunConfig& cfg);
CliResult cmd_critique(const RunConfig& cfg);

} // namespace qes::cli
