#pragma once

#include "setvi/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace setvi {

/// Exit codes shared by the run pipelines and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitNoConvergence = 4;
inline constexpr int kExitContainmentViolation = 5;

/// Options common to the run pipelines; each pipeline reads the subset it
/// needs. Defaults reproduce the documented experiment setup.
struct RunConfig {
    double epsilon = 1e-6;
    long max_iterations = kDefaultMaxIterations;
    int game_iterations = 100;
    std::string opponent = "min";        ///< min | max | fixed
    std::vector<double> gamma2_list;     ///< empty: use the problem's gamma2
    std::optional<std::uint64_t> seed;   ///< overrides the problem seed
    std::string out_dir = ".";
    double tol = 1e-6;                   ///< containment tolerance
    // verify knobs
    int contraction_pairs = 500;
    int containment_samples = 200;
    int mc_runs = 20;
    int mc_steps = 200;
    double mc_threshold = 1e-3;
};

/// Returns one message per invalid config field; empty means usable.
std::vector<std::string> validate_config(const RunConfig& config);

/// Standard value iteration; writes solve_report.json and value.csv.
int run_solve(const ProblemFile& problem, const RunConfig& config);

/// Interval fixed point; writes set_solve_report.json and bounds.csv.
int run_set_solve(const ProblemFile& problem, const RunConfig& config);

/// Two-player simulation, one run per gamma2 value; writes a trajectory CSV
/// per run plus containment.json. Exit code flags post-burn-in violations.
int run_game(const ProblemFile& problem, const RunConfig& config);

/// Property suite (contraction ratios, fixed-point containment, Monte-Carlo
/// convergence) on the problem's cost-interval family; writes
/// verify_report.json. Exit code flags any failed check.
int run_verify(const ProblemFile& problem, const RunConfig& config);

}  // namespace setvi
