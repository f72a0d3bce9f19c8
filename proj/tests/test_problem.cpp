#include "setvi/problem.hpp"

#include "setvi/runner.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace setvi;
using namespace testsupport;

namespace {

const char* kTwoStateText = R"(# two-state fixture with interval costs
problem mdp
states 2
actions 2
discount 0.9
transition 0 0 : 0.9 0.1
transition 0 1 : 0.1 0.9
transition 1 0 : 0.9 0.1
transition 1 1 : 0.5 0.5
cost 0 : 4 5
cost 1 : 3 1
cost-lower 0 : 3.4 4.3
cost-lower 1 : 2.5 0
cost-upper 0 : 4.6 5.7
cost-upper 1 : 3.5 2
)";

const char* kGridGameText = R"(problem game
rows 3
cols 3
gamma1 0.7
gamma2 0.5
cost-range 0 1
coupling-range 0 0.1
seed 0
)";

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::path("problem_test_out") / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool any_detail(const ProblemError& e, const std::string& needle) {
    for (const auto& d : e.details()) {
        if (d.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("the two-state fixture parses into the expected model") {
    const ProblemFile problem = parse_problem(kTwoStateText);
    REQUIRE(problem.kind == ProblemKind::mdp);
    REQUIRE(problem.mdp.has_value());
    REQUIRE(problem.cost_interval.has_value());
    CHECK(problem.has_nominal_cost);

    const Mdp expected = two_state_mdp();
    CHECK(problem.mdp->transition == expected.transition);
    CHECK(problem.mdp->cost == expected.cost);
    CHECK(problem.mdp->discount == expected.discount);
    CHECK(validate_mdp(*problem.mdp).empty());

    const MdpFamily expected_family = two_state_family();
    CHECK(problem.cost_interval->lower == expected_family.cost_set.lower);
    CHECK(problem.cost_interval->upper == expected_family.cost_set.upper);
}

TEST_CASE("a non-stochastic column is reported with its line and indices") {
    std::string text = kTwoStateText;
    const auto pos = text.find("transition 1 0 : 0.9 0.1");
    text.replace(pos, std::string("transition 1 0 : 0.9 0.1").size(),
                 "transition 1 0 : 0.8 0.1");
    try {
        parse_problem(text);
        FAIL("expected ProblemError");
    } catch (const ProblemError& e) {
        CHECK(e.category() == ProblemError::Category::validation);
        CHECK(any_detail(e, "column (1,0) not stochastic"));
        CHECK(any_detail(e, "line 8"));
    }
}

TEST_CASE("renormalize repairs columns within 1e-6 only") {
    std::string text = kTwoStateText;
    const auto pos = text.find("transition 1 0 : 0.9 0.1");
    text.replace(pos, std::string("transition 1 0 : 0.9 0.1").size(),
                 "transition 1 0 : 0.9000004 0.1");
    CHECK_THROWS_AS(parse_problem(text), ProblemError);

    const ProblemFile fixed = parse_problem(text, ParseOptions{true});
    CHECK(validate_mdp(*fixed.mdp).empty());
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_problem("problem mdp\nstates 2\nwhatever 3\ntransition 0 0 0.9\n");
        FAIL("expected ProblemError");
    } catch (const ProblemError& e) {
        CHECK(e.category() == ProblemError::Category::syntax);
        CHECK(any_detail(e, "line 3"));
        CHECK(any_detail(e, "whatever"));
    }

    CHECK_THROWS_AS(parse_problem("states 2\n"), ProblemError);
    CHECK_THROWS_AS(parse_problem(""), ProblemError);
    CHECK_THROWS_AS(parse_problem("problem mdp\nstates 2\nstates 3\n"), ProblemError);
}

TEST_CASE("missing pieces are reported as validation problems") {
    try {
        parse_problem("problem mdp\nstates 2\nactions 2\n");
        FAIL("expected ProblemError");
    } catch (const ProblemError& e) {
        CHECK(e.category() == ProblemError::Category::validation);
        CHECK(any_detail(e, "missing 'discount'"));
        CHECK(any_detail(e, "transition"));
    }

    // Interval bounds must come as a pair.
    std::string text = kTwoStateText;
    const auto pos = text.find("cost-upper");
    text.erase(pos);  // drop both upper rows
    try {
        parse_problem(text);
        FAIL("expected ProblemError");
    } catch (const ProblemError& e) {
        CHECK(any_detail(e, "must be given together"));
    }
}

TEST_CASE("a grid declaration expands to the documented shape") {
    const ProblemFile problem =
        parse_problem("problem grid\nrows 3\ncols 3\ndiscount 0.9\nseed 4\n");
    REQUIRE(problem.kind == ProblemKind::grid);
    const Mdp mdp = problem.build_mdp();
    CHECK(mdp.num_states == 9);
    CHECK(mdp.num_actions == 4);
    CHECK(validate_mdp(mdp).empty());

    // The same declaration with a seed override regenerates costs only.
    const Mdp other = problem.build_mdp(5);
    CHECK(other.transition == mdp.transition);
    CHECK(other.cost != mdp.cost);
}

TEST_CASE("game declarations materialize deterministically") {
    const ProblemFile problem = parse_problem(kGridGameText);
    REQUIRE(problem.kind == ProblemKind::game);
    const GameSpec a = problem.build_game();
    const GameSpec b = problem.build_game();
    CHECK(a.nominal_cost == b.nominal_cost);
    CHECK(a.coupling == b.coupling);
    CHECK(validate_game(a).empty());
    CHECK((a.coupling.array() <= 0.1).all());
    CHECK((a.nominal_cost.array() <= 1.0).all());

    const GameSpec other = problem.build_game(1);
    CHECK(other.nominal_cost != a.nominal_cost);

    const MdpFamily family = problem.build_family();
    CHECK(family.cost_set.lower == a.nominal_cost);
    CHECK(family.cost_set.upper == a.nominal_cost + a.coupling);
    CHECK(family.base.discount == a.gamma1);
}

TEST_CASE("seeds parse exactly, including values above 2^53") {
    const ProblemFile problem = parse_problem(
        "problem grid\nrows 3\ncols 3\ndiscount 0.9\nseed 18446744073709551615\n");
    CHECK(problem.seed == 18446744073709551615ULL);
    CHECK(parse_problem(emit_problem(problem)).seed == problem.seed);

    CHECK_THROWS_AS(parse_problem("problem grid\nrows 3\ncols 3\nseed -4\n"), ProblemError);
    CHECK_THROWS_AS(parse_problem("problem grid\nrows 3\ncols 3\nseed 1\nseed 2\n"),
                    ProblemError);
}

TEST_CASE("emitting and re-parsing is the identity on all three kinds") {
    const char* documents[] = {
        kTwoStateText,
        "problem grid\nrows 2\ncols 4\np-main 0.4\np-side 0.2\ndiscount 0.85\n"
        "cost-range 0.5 2\nseed 11\n",
        kGridGameText,
        "problem game\nstates 2\nactions 2\ngamma1 0.9\ngamma2 0.8\n"
        "transition 0 0 : 0.9 0.1\ntransition 0 1 : 0.1 0.9\n"
        "transition 1 0 : 0.9 0.1\ntransition 1 1 : 0.5 0.5\n"
        "cost 0 : 4 5\ncost 1 : 3 1\ncoupling 0 : 0.1 0.2\ncoupling 1 : 0 0.05\nseed 3\n",
    };
    for (const char* text : documents) {
        const ProblemFile parsed = parse_problem(text);
        const std::string emitted = emit_problem(parsed);
        const ProblemFile reparsed = parse_problem(emitted);
        CHECK(emit_problem(reparsed) == emitted);
        CHECK(reparsed.kind == parsed.kind);
    }
}

TEST_CASE("round-trip survives arbitrary double-precision entries") {
    Rng rng(51);
    for (int rep = 0; rep < 20; ++rep) {
        const Mdp mdp = random_mdp(rng, rng.uniform_int(2, 4), rng.uniform_int(2, 4));
        ProblemFile problem;
        problem.kind = ProblemKind::mdp;
        problem.mdp = mdp;
        problem.has_nominal_cost = true;
        problem.discount = mdp.discount;
        problem.cost_interval = IntervalCost(
            (mdp.cost.array() - rng.uniform(0.0, 0.3)).matrix(),
            (mdp.cost.array() + rng.uniform(0.0, 0.3)).matrix());

        const ProblemFile reparsed = parse_problem(emit_problem(problem));
        REQUIRE(reparsed.mdp.has_value());
        CHECK(reparsed.mdp->transition == mdp.transition);
        CHECK(reparsed.mdp->cost == mdp.cost);
        CHECK(reparsed.mdp->discount == mdp.discount);
        REQUIRE(reparsed.cost_interval.has_value());
        CHECK(reparsed.cost_interval->lower == problem.cost_interval->lower);
        CHECK(reparsed.cost_interval->upper == problem.cost_interval->upper);
    }
}

TEST_CASE("verify accepts the player-1 family derived from a game") {
    const ProblemFile problem = parse_problem(kGridGameText);
    RunConfig config;
    config.out_dir = fresh_dir("verify_game").string();
    config.contraction_pairs = 50;
    config.containment_samples = 20;
    config.mc_runs = 3;
    config.mc_steps = 120;
    REQUIRE(run_verify(problem, config) == kExitOk);

    const auto doc = nlohmann::json::parse(slurp(config.out_dir + "/verify_report.json"));
    CHECK(doc["ok"].get<bool>());
    CHECK(doc["gamma"].get<double>() == 0.7);
}

TEST_CASE("solve emits JSON identical to the library result") {
    const ProblemFile problem = parse_problem(kTwoStateText);
    RunConfig config;
    config.out_dir = fresh_dir("solve").string();
    REQUIRE(run_solve(problem, config) == kExitOk);

    const auto doc = nlohmann::json::parse(slurp(config.out_dir + "/solve_report.json"));
    const SolveReport report =
        value_iteration(*problem.mdp, ValueVec::Zero(2), config.epsilon);
    REQUIRE(doc["value"].size() == 2);
    CHECK(doc["value"][0].get<double>() == report.value(0));
    CHECK(doc["value"][1].get<double>() == report.value(1));
    CHECK(doc["iterations"].get<long>() == report.iterations);
    CHECK(doc["policy"][0].get<int>() == report.policy.action[0]);
    CHECK(doc["policy"][1].get<int>() == report.policy.action[1]);
}

TEST_CASE("set-solve emits the interval fixed point") {
    const ProblemFile problem = parse_problem(kTwoStateText);
    RunConfig config;
    config.out_dir = fresh_dir("set_solve").string();
    REQUIRE(run_set_solve(problem, config) == kExitOk);

    const auto doc = nlohmann::json::parse(slurp(config.out_dir + "/set_solve_report.json"));
    const SetSolveReport report = set_value_iteration(
        MdpFamily{*problem.mdp, *problem.cost_interval}, IntervalVector::zero(2),
        config.epsilon);
    CHECK(doc["lower"][0].get<double>() == report.fixed_point.lower(0));
    CHECK(doc["upper"][1].get<double>() == report.fixed_point.upper(1));
}

TEST_CASE("game runs stay inside the bounds and write byte-identical outputs") {
    const ProblemFile problem = parse_problem(kGridGameText);
    RunConfig config;
    config.game_iterations = 80;
    config.gamma2_list = {0.3, 0.7};
    config.out_dir = fresh_dir("game_a").string();
    REQUIRE(run_game(problem, config) == kExitOk);

    const auto doc = nlohmann::json::parse(slurp(config.out_dir + "/containment.json"));
    CHECK(doc["ok"].get<bool>());
    for (const auto& run : doc["runs"]) {
        CHECK(run["violations"].empty());
    }

    RunConfig repeat = config;
    repeat.out_dir = fresh_dir("game_b").string();
    REQUIRE(run_game(problem, repeat) == kExitOk);
    for (const char* name : {"trajectory_gamma2_0.3.csv", "trajectory_gamma2_0.7.csv"}) {
        CHECK(slurp(std::filesystem::path(config.out_dir) / name) ==
              slurp(std::filesystem::path(repeat.out_dir) / name));
    }
}

TEST_CASE("verify passes on the fixture family") {
    const ProblemFile problem = parse_problem(kTwoStateText);
    RunConfig config;
    config.out_dir = fresh_dir("verify").string();
    config.contraction_pairs = 100;
    config.containment_samples = 50;
    config.mc_runs = 5;
    REQUIRE(run_verify(problem, config) == kExitOk);

    const auto doc = nlohmann::json::parse(slurp(config.out_dir + "/verify_report.json"));
    CHECK(doc["ok"].get<bool>());
    CHECK(doc["contraction"]["max_ratio"].get<double>() <= 0.9);
    CHECK(doc["containment"]["violations"].get<int>() == 0);
    CHECK(doc["monte_carlo"]["ok"].get<bool>());
}

TEST_CASE("pipelines map failures onto distinct exit codes") {
    // Solve on an interval-only declaration is a validation failure.
    std::string interval_only = kTwoStateText;
    const auto pos = interval_only.find("cost 0");
    interval_only.erase(pos, std::string("cost 0 : 4 5\ncost 1 : 3 1\n").size());
    const ProblemFile no_nominal = parse_problem(interval_only);
    RunConfig config;
    config.out_dir = fresh_dir("exit_codes").string();
    CHECK(run_solve(no_nominal, config) == kExitValidationError);

    // An absurd iteration cap is a non-convergence failure.
    const ProblemFile problem = parse_problem(kTwoStateText);
    RunConfig capped = config;
    capped.max_iterations = 2;
    CHECK(run_solve(problem, capped) == kExitNoConvergence);

    // A run too short to converge trips the containment exit.
    const ProblemFile game = parse_problem(kGridGameText);
    RunConfig tiny = config;
    tiny.game_iterations = 4;
    CHECK(run_game(game, tiny) == kExitContainmentViolation);

    // Config validation catches malformed options.
    RunConfig bad = config;
    bad.opponent = "qlearning";
    bad.epsilon = -1.0;
    CHECK(validate_config(bad).size() == 2);
}
