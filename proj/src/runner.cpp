#include "setvi/runner.hpp"

#include "setvi/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace setvi {

namespace {

using nlohmann::json;

// Seed streams: 0 and 1 are reserved by problem materialization (costs,
// coupling); everything below keeps clear of them.
constexpr std::uint64_t kOpponentStreamBase = 2;
constexpr std::uint64_t kVerifyContractionStream = 64;
constexpr std::uint64_t kVerifyContainmentStream = 65;
constexpr std::uint64_t kVerifyMonteCarloStream = 66;

std::filesystem::path prepare_out_dir(const RunConfig& config) {
    std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
}

void write_json(const std::filesystem::path& path, const json& doc) {
    write_text(path, doc.dump(2) + "\n");
}

json to_json_array(const ValueVec& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

std::string format_gamma(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

/// Sampled interval-vector pair for the contraction check: shared random
/// centers shifted and widened independently.
IntervalVector random_interval(Rng& rng, int size, double center_lo, double center_hi,
                               double max_width) {
    ValueVec lower(size);
    ValueVec upper(size);
    for (int i = 0; i < size; ++i) {
        const double center = rng.uniform(center_lo, center_hi);
        const double width = rng.uniform(0.0, max_width);
        lower(i) = center - width / 2.0;
        upper(i) = center + width / 2.0;
    }
    return {std::move(lower), std::move(upper)};
}

int guarded(const char* command, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConvergenceError& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

std::vector<std::string> validate_config(const RunConfig& config) {
    std::vector<std::string> problems;
    if (config.epsilon <= 0.0) problems.push_back("epsilon must be > 0");
    if (config.max_iterations < 1) problems.push_back("max-iters must be >= 1");
    if (config.game_iterations < 1) problems.push_back("iters must be >= 1");
    if (config.tol < 0.0) problems.push_back("tol must be >= 0");
    if (config.opponent != "min" && config.opponent != "max" && config.opponent != "fixed") {
        problems.push_back("opponent must be one of min|max|fixed");
    }
    for (double g : config.gamma2_list) {
        if (!(g > 0.0 && g < 1.0)) {
            std::ostringstream msg;
            msg << "gamma2 value " << g << " out of range (0,1)";
            problems.push_back(msg.str());
        }
    }
    return problems;
}

int run_solve(const ProblemFile& problem, const RunConfig& config) {
    return guarded("solve", [&]() {
        const Mdp mdp = problem.build_mdp(config.seed);
        const SolveReport report = value_iteration(mdp, ValueVec::Zero(mdp.num_states),
                                                   config.epsilon, config.max_iterations);

        const auto dir = prepare_out_dir(config);
        json doc;
        doc["command"] = "solve";
        doc["epsilon"] = config.epsilon;
        doc["iterations"] = report.iterations;
        doc["residual"] = report.residual;
        doc["value"] = to_json_array(report.value);
        doc["policy"] = report.policy.action;
        write_json(dir / "solve_report.json", doc);

        std::ostringstream csv;
        csv << std::setprecision(17);
        csv << "state,value\n";
        for (Eigen::Index s = 0; s < report.value.size(); ++s) {
            csv << s << "," << report.value(s) << "\n";
        }
        write_text(dir / "value.csv", csv.str());
        std::cout << "solve: converged in " << report.iterations << " iterations (residual "
                  << report.residual << "); wrote " << (dir / "solve_report.json").string()
                  << "\n";
        return kExitOk;
    });
}

int run_set_solve(const ProblemFile& problem, const RunConfig& config) {
    return guarded("set-solve", [&]() {
        const MdpFamily family = problem.build_family(config.seed);
        const SetSolveReport report =
            set_value_iteration(family, IntervalVector::zero(family.base.num_states),
                                config.epsilon, config.max_iterations);

        const auto dir = prepare_out_dir(config);
        json doc;
        doc["command"] = "set-solve";
        doc["epsilon"] = config.epsilon;
        doc["iterations"] = report.iterations;
        doc["residual"] = report.residual;
        doc["lower"] = to_json_array(report.fixed_point.lower);
        doc["upper"] = to_json_array(report.fixed_point.upper);
        write_json(dir / "set_solve_report.json", doc);

        std::ostringstream csv;
        csv << std::setprecision(17);
        csv << "state,lower,upper\n";
        for (Eigen::Index s = 0; s < report.fixed_point.size(); ++s) {
            csv << s << "," << report.fixed_point.lower(s) << ","
                << report.fixed_point.upper(s) << "\n";
        }
        write_text(dir / "bounds.csv", csv.str());
        std::cout << "set-solve: converged in " << report.iterations
                  << " iterations (residual " << report.residual << "); wrote "
                  << (dir / "set_solve_report.json").string() << "\n";
        return kExitOk;
    });
}

int run_game(const ProblemFile& problem, const RunConfig& config) {
    return guarded("game", [&]() {
        const std::uint64_t master = config.seed.value_or(problem.seed);
        const GameSpec spec = problem.build_game(master);
        const MdpFamily family = problem.build_family(master);
        const SetSolveReport bounds =
            set_value_iteration(family, IntervalVector::zero(family.base.num_states),
                                config.epsilon, config.max_iterations);

        std::vector<double> gamma2_values = config.gamma2_list;
        if (gamma2_values.empty()) gamma2_values.push_back(spec.gamma2);
        const int burn_in = config.game_iterations / 2;
        const double lower_norm = bounds.fixed_point.lower.lpNorm<Eigen::Infinity>();
        const double upper_norm = bounds.fixed_point.upper.lpNorm<Eigen::Infinity>();

        const auto dir = prepare_out_dir(config);
        json doc;
        doc["command"] = "game";
        doc["opponent"] = config.opponent;
        doc["epsilon"] = config.epsilon;
        doc["tol"] = config.tol;
        doc["iterations"] = config.game_iterations;
        doc["burn_in"] = burn_in;
        doc["seed"] = master;
        doc["bounds"] = {{"lower", to_json_array(bounds.fixed_point.lower)},
                         {"upper", to_json_array(bounds.fixed_point.upper)},
                         {"lower_norm", lower_norm},
                         {"upper_norm", upper_norm}};
        doc["runs"] = json::array();

        bool all_contained = true;
        for (std::size_t run = 0; run < gamma2_values.size(); ++run) {
            const double gamma2 = gamma2_values[run];
            const std::uint64_t opponent_seed = derive_seed(master, kOpponentStreamBase + run);
            OpponentStrategy opponent;
            if (config.opponent == "min") {
                opponent = OpponentStrategy::make_minimizer(gamma2, opponent_seed);
            } else if (config.opponent == "max") {
                opponent = OpponentStrategy::make_maximizer(gamma2, opponent_seed);
            } else {
                opponent = OpponentStrategy::make_fixed(
                    DeterministicPolicy{std::vector<int>(spec.base.num_states, 0)});
            }

            const Trajectory trajectory =
                run_two_player_vi(spec, opponent, ValueVec::Zero(spec.base.num_states),
                                  config.game_iterations);
            const ContainmentReport containment =
                check_trajectory_bounds(trajectory, bounds.fixed_point, burn_in, config.tol);

            const std::string csv_name = "trajectory_gamma2_" + format_gamma(gamma2) + ".csv";
            std::ostringstream csv;
            csv << std::setprecision(17);
            csv << "iter";
            for (int s = 0; s < spec.base.num_states; ++s) csv << ",v" << s;
            csv << ",norm_inf,bound_lower_norm,bound_upper_norm\n";
            for (const auto& step : trajectory.steps) {
                csv << step.k;
                for (Eigen::Index s = 0; s < step.value.size(); ++s) {
                    csv << "," << step.value(s);
                }
                csv << "," << step.value.lpNorm<Eigen::Infinity>() << "," << lower_norm
                    << "," << upper_norm << "\n";
            }
            write_text(dir / csv_name, csv.str());

            json run_doc;
            run_doc["gamma2"] = gamma2;
            run_doc["csv"] = csv_name;
            run_doc["opponent_seed"] = opponent_seed;
            run_doc["violations"] = containment.violations;
            if (containment.first_violation) {
                run_doc["first_violation"] = *containment.first_violation;
            } else {
                run_doc["first_violation"] = nullptr;
            }
            run_doc["max_excess"] = containment.max_excess;
            doc["runs"].push_back(std::move(run_doc));
            all_contained = all_contained && containment.violations.empty();
        }
        doc["ok"] = all_contained;
        write_json(dir / "containment.json", doc);
        std::cout << "game: " << gamma2_values.size() << " run(s), "
                  << (all_contained ? "no containment violations"
                                    : "containment violations found")
                  << "; wrote " << (dir / "containment.json").string() << "\n";
        return all_contained ? kExitOk : kExitContainmentViolation;
    });
}

int run_verify(const ProblemFile& problem, const RunConfig& config) {
    return guarded("verify", [&]() {
        const std::uint64_t master = config.seed.value_or(problem.seed);
        const MdpFamily family = problem.build_family(master);
        const double gamma = family.base.discount;
        const int states = family.base.num_states;
        const SetSolveReport reference = set_value_iteration(
            family, IntervalVector::zero(states), config.epsilon, config.max_iterations);

        // Contraction ratios over random interval pairs.
        Rng contraction_rng(derive_seed(master, kVerifyContractionStream));
        const double value_scale =
            family.cost_set.upper.cwiseAbs().maxCoeff() / (1.0 - gamma) + 1.0;
        double max_ratio = 0.0;
        for (int i = 0; i < config.contraction_pairs; ++i) {
            const IntervalVector x =
                random_interval(contraction_rng, states, -value_scale, value_scale, value_scale);
            const IntervalVector y =
                random_interval(contraction_rng, states, -value_scale, value_scale, value_scale);
            if (hausdorff_interval(x, y) == 0.0) continue;
            max_ratio = std::max(max_ratio, check_contraction(family, x, y));
        }
        const bool contraction_ok = max_ratio <= gamma;

        // Fixed points of sampled constant costs stay inside the inflated set.
        const std::uint64_t containment_master = derive_seed(master, kVerifyContainmentStream);
        double max_excess = 0.0;
        int containment_violations = 0;
        for (int i = 0; i < config.containment_samples; ++i) {
            const Matrix cost =
                sample_cost(family, derive_seed(containment_master, static_cast<std::uint64_t>(i)));
            const SolveReport solved =
                value_iteration(family.with_cost(cost), ValueVec::Zero(states),
                                config.epsilon, config.max_iterations);
            const double excess = interval_excess(reference.fixed_point, solved.value);
            max_excess = std::max(max_excess, excess);
            if (excess > config.epsilon) ++containment_violations;
        }
        const bool containment_ok = containment_violations == 0;

        // Monte-Carlo value iteration under randomly drawn per-step costs.
        const std::uint64_t mc_master = derive_seed(master, kVerifyMonteCarloStream);
        json final_distances = json::array();
        bool mc_ok = true;
        double max_final = 0.0;
        for (int run = 0; run < config.mc_runs; ++run) {
            const auto distances = monte_carlo_convergence(
                family, ValueVec::Zero(states), config.mc_steps,
                derive_seed(mc_master, static_cast<std::uint64_t>(run)), config.epsilon);
            // Must drop below the threshold and stay there.
            std::size_t crossed = distances.size();
            for (std::size_t k = 0; k < distances.size(); ++k) {
                if (distances[k] < config.mc_threshold) {
                    crossed = k;
                    break;
                }
            }
            bool run_ok = crossed < distances.size();
            for (std::size_t k = crossed; k < distances.size() && run_ok; ++k) {
                run_ok = distances[k] <= config.mc_threshold;
            }
            mc_ok = mc_ok && run_ok;
            max_final = std::max(max_final, distances.back());
            final_distances.push_back(distances.back());
        }

        const bool all_ok = contraction_ok && containment_ok && mc_ok;
        const auto dir = prepare_out_dir(config);
        json doc;
        doc["command"] = "verify";
        doc["seed"] = master;
        doc["epsilon"] = config.epsilon;
        doc["gamma"] = gamma;
        doc["contraction"] = {{"pairs", config.contraction_pairs},
                              {"max_ratio", max_ratio},
                              {"ok", contraction_ok}};
        doc["containment"] = {{"samples", config.containment_samples},
                              {"max_excess", max_excess},
                              {"violations", containment_violations},
                              {"ok", containment_ok}};
        doc["monte_carlo"] = {{"runs", config.mc_runs},
                              {"steps", config.mc_steps},
                              {"threshold", config.mc_threshold},
                              {"final_distances", final_distances},
                              {"max_final_distance", max_final},
                              {"ok", mc_ok}};
        doc["ok"] = all_ok;
        write_json(dir / "verify_report.json", doc);
        std::cout << "verify: max contraction ratio " << max_ratio << " (gamma " << gamma
                  << "), containment max excess " << max_excess << ", "
                  << (all_ok ? "all checks passed" : "CHECKS FAILED") << "; wrote "
                  << (dir / "verify_report.json").string() << "\n";
        return all_ok ? kExitOk : kExitContainmentViolation;
    });
}

}  // namespace setvi
