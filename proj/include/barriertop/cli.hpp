#pragma once

// Command-line front end: JSON configuration with flag overrides, parameter
// sweeps evaluated in parallel with ordered output assembly, and
// deterministic CSV emission (17 significant digits, LF line endings,
// # header comments carrying version, config hash and kappa).

#include <map>
#include <string>
#include <vector>

#include "barriertop/model.hpp"

namespace barriertop {

struct SweepSpec {
    std::string axis; // theta | lambda1 | q | r | Y1
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
};

struct OracleSpec {
    double L = 15.0;
    int N = 1500;
    double q_match = 8.0;
    int slices = 4096;
};

struct RunConfig {
    BarrierParams params = BarrierParams::cubic_quartic(0.2, 1.0, 0.01);
    double kappa = 10.0;
    SweepSpec sweep;
    bool sweep_given = false;
    std::map<std::string, double> fixed;
    OracleSpec oracle;
    std::vector<double> epsilons; // compare-oracle epsilon set
    bool allow_strong_asymmetry = false;
    bool all_formulas = true;
    std::string out_path; // empty: stdout
};

// Parse a JSON config file into a RunConfig; throws ConfigError.
RunConfig load_config_file(const std::string& path);

// Deterministic 17-significant-digit formatting used for every CSV value.
std::string fmt17(double v);

// FNV-1a hash of the canonicalized effective configuration.
std::string config_hash(const RunConfig& cfg, const std::string& subcommand);

// Full CLI: parses argv, runs the subcommand, writes CSV.
// Returns 0 on success, 2 on configuration errors, 3 on numerical failure.
int run_cli(int argc, char** argv);

} // namespace barriertop
