#include "setvi/problem.hpp"
#include "setvi/runner.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct CliState {
    std::string problem_path;
    setvi::RunConfig config;
    bool renormalize = false;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
};

void add_common_options(CLI::App* cmd, CliState& state) {
    cmd->add_option("problem", state.problem_path, "problem file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--epsilon", state.config.epsilon, "solver precision target");
    cmd->add_option("--max-iters", state.config.max_iterations, "solver iteration cap");
    cmd->add_option("--out", state.config.out_dir, "output directory");
    cmd->add_option("--seed", state.seed_value, "master seed (overrides the problem file)")
        ->each([&state](const std::string&) { state.seed_given = true; });
    cmd->add_flag("--renormalize", state.renormalize,
                  "rescale near-stochastic transition columns (within 1e-6)");
}

int dispatch(const std::string& command, const CliState& state) {
    std::ifstream file(state.problem_path);
    if (!file) {
        std::cerr << "cannot read " << state.problem_path << "\n";
        return 1;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    setvi::RunConfig config = state.config;
    if (state.seed_given) config.seed = state.seed_value;
    if (const auto problems = setvi::validate_config(config); !problems.empty()) {
        for (const auto& p : problems) std::cerr << "config: " << p << "\n";
        return setvi::kExitValidationError;
    }

    setvi::ProblemFile problem;
    try {
        problem = setvi::parse_problem(buffer.str(), {state.renormalize});
    } catch (const setvi::ProblemError& e) {
        for (const auto& detail : e.details()) std::cerr << detail << "\n";
        return e.category() == setvi::ProblemError::Category::syntax
                   ? setvi::kExitParseError
                   : setvi::kExitValidationError;
    }

    if (command == "solve") return setvi::run_solve(problem, config);
    if (command == "set-solve") return setvi::run_set_solve(problem, config);
    if (command == "game") return setvi::run_game(problem, config);
    return setvi::run_verify(problem, config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discounted-MDP solver with interval cost uncertainty: standard and "
                 "set-based value iteration, plus coupled two-player simulations"};
    app.require_subcommand(1);

    CliState state;

    CLI::App* solve = app.add_subcommand("solve", "value iteration on a single MDP");
    add_common_options(solve, state);

    CLI::App* set_solve =
        app.add_subcommand("set-solve", "interval fixed point of the cost family");
    add_common_options(set_solve, state);

    CLI::App* game = app.add_subcommand("game", "two-player simulation with bound checks");
    add_common_options(game, state);
    game->add_option("--iters", state.config.game_iterations, "game iterations");
    game->add_option("--opponent", state.config.opponent, "opponent strategy: min|max|fixed");
    game->add_option("--gamma2", state.config.gamma2_list,
                     "opponent discount factors, one run per value")
        ->delimiter(',');
    game->add_option("--tol", state.config.tol, "containment tolerance");

    CLI::App* verify = app.add_subcommand("verify", "property suite on the cost family");
    add_common_options(verify, state);
    verify->add_option("--tol", state.config.tol, "containment tolerance");
    verify->add_option("--contraction-pairs", state.config.contraction_pairs,
                       "random interval pairs for the contraction check");
    verify->add_option("--containment-samples", state.config.containment_samples,
                       "sampled costs for the fixed-point containment check");
    verify->add_option("--mc-runs", state.config.mc_runs, "Monte-Carlo cost schedules");
    verify->add_option("--mc-steps", state.config.mc_steps, "steps per Monte-Carlo schedule");

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    return dispatch(command, state);
}
