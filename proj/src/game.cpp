#include "setvi/game.hpp"

#include "setvi/rng.hpp"

#include <limits>
#include <sstream>

namespace setvi {

namespace {

void check_game_policy(const GameSpec& spec, const DeterministicPolicy& pi, const char* who) {
    if (static_cast<int>(pi.action.size()) != spec.base.num_states) {
        std::ostringstream msg;
        msg << who << " policy has length " << pi.action.size() << ", expected "
            << spec.base.num_states;
        throw std::invalid_argument(msg.str());
    }
    for (int s = 0; s < spec.base.num_states; ++s) {
        if (pi.action[s] < 0 || pi.action[s] >= spec.base.num_actions) {
            std::ostringstream msg;
            msg << who << " policy has invalid action " << pi.action[s] << " at state " << s;
            throw std::invalid_argument(msg.str());
        }
    }
}

// Max-cost counterparts of bellman_apply / greedy_policy, used by the
// maximizing opponent. Ties break to the lowest action index.
ValueVec bellman_apply_max(const Mdp& mdp, const ValueVec& v) {
    ValueVec out(mdp.num_states);
    for (int s = 0; s < mdp.num_states; ++s) {
        double best = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < mdp.num_actions; ++a) {
            const double q =
                mdp.cost(s, a) + mdp.discount * mdp.transition.col(mdp.column(s, a)).dot(v);
            if (q > best) best = q;
        }
        out(s) = best;
    }
    return out;
}

DeterministicPolicy greedy_policy_max(const Mdp& mdp, const ValueVec& v) {
    DeterministicPolicy pi;
    pi.action.resize(mdp.num_states);
    for (int s = 0; s < mdp.num_states; ++s) {
        double best = -std::numeric_limits<double>::infinity();
        int best_action = 0;
        for (int a = 0; a < mdp.num_actions; ++a) {
            const double q =
                mdp.cost(s, a) + mdp.discount * mdp.transition.col(mdp.column(s, a)).dot(v);
            if (q > best) {
                best = q;
                best_action = a;
            }
        }
        pi.action[s] = best_action;
    }
    return pi;
}

Matrix player2_cost(const GameSpec& spec, const DeterministicPolicy& pi1) {
    Matrix cost = spec.nominal_cost;
    for (int s = 0; s < spec.base.num_states; ++s) {
        cost(s, pi1.action[s]) -= spec.coupling(s, pi1.action[s]);
    }
    return cost;
}

}  // namespace

std::vector<std::string> validate_game(const GameSpec& spec) {
    Mdp probe = spec.base;
    probe.cost = spec.nominal_cost;
    probe.discount = 0.5;  // placeholder; gamma1/gamma2 are checked separately
    std::vector<std::string> violations = validate_mdp(probe);

    if (spec.coupling.rows() != spec.base.num_states ||
        spec.coupling.cols() != spec.base.num_actions) {
        std::ostringstream msg;
        msg << "coupling matrix is " << spec.coupling.rows() << "x" << spec.coupling.cols()
            << ", expected " << spec.base.num_states << "x" << spec.base.num_actions;
        violations.push_back(msg.str());
    } else if (!spec.coupling.allFinite() || (spec.coupling.array() < 0.0).any()) {
        violations.push_back("coupling matrix has a negative or non-finite entry");
    }
    if (!(spec.gamma1 > 0.0 && spec.gamma1 < 1.0)) {
        violations.push_back("gamma1 out of range (0,1)");
    }
    if (!(spec.gamma2 > 0.0 && spec.gamma2 < 1.0)) {
        violations.push_back("gamma2 out of range (0,1)");
    }
    return violations;
}

OpponentStrategy OpponentStrategy::make_minimizer(double gamma2, std::uint64_t seed) {
    OpponentStrategy opp;
    opp.kind = Kind::vi_minimizer;
    opp.gamma2 = gamma2;
    opp.seed = seed;
    return opp;
}

OpponentStrategy OpponentStrategy::make_maximizer(double gamma2, std::uint64_t seed) {
    OpponentStrategy opp;
    opp.kind = Kind::vi_maximizer;
    opp.gamma2 = gamma2;
    opp.seed = seed;
    return opp;
}

OpponentStrategy OpponentStrategy::make_fixed(DeterministicPolicy policy) {
    OpponentStrategy opp;
    opp.kind = Kind::fixed_policy;
    opp.fixed = std::move(policy);
    return opp;
}

std::pair<Matrix, Matrix> player_costs(const GameSpec& spec, const DeterministicPolicy& pi1,
                                       const DeterministicPolicy& pi2) {
    check_game_policy(spec, pi1, "player 1");
    check_game_policy(spec, pi2, "player 2");
    Matrix c1 = spec.nominal_cost;
    for (int s = 0; s < spec.base.num_states; ++s) {
        c1(s, pi2.action[s]) += spec.coupling(s, pi2.action[s]);
    }
    return {std::move(c1), player2_cost(spec, pi1)};
}

std::pair<IntervalCost, IntervalCost> derive_cost_intervals(const GameSpec& spec) {
    // Player 2's bounds are [C - A, C]: the coupling only ever lowers its cost.
    IntervalCost player1(spec.nominal_cost, spec.nominal_cost + spec.coupling);
    IntervalCost player2(spec.nominal_cost - spec.coupling, spec.nominal_cost);
    return {std::move(player1), std::move(player2)};
}

Trajectory run_two_player_vi(const GameSpec& spec, const OpponentStrategy& opponent,
                             const ValueVec& v0, int num_iters) {
    if (num_iters < 1) {
        throw std::invalid_argument("run_two_player_vi: num_iters must be >= 1");
    }
    if (v0.size() != spec.base.num_states) {
        throw std::invalid_argument("run_two_player_vi: v0 length mismatch");
    }
    if (opponent.kind == OpponentStrategy::Kind::fixed_policy) {
        check_game_policy(spec, opponent.fixed, "fixed opponent");
    }

    const int states = spec.base.num_states;
    Mdp mdp1 = spec.base;
    mdp1.discount = spec.gamma1;
    Mdp mdp2 = spec.base;
    mdp2.discount = opponent.gamma2;

    DeterministicPolicy pi1{std::vector<int>(states, 0)};
    DeterministicPolicy pi2{std::vector<int>(states, 0)};
    ValueVec value = v0;

    ValueVec opp_value;
    if (opponent.kind != OpponentStrategy::Kind::fixed_policy) {
        Rng rng(opponent.seed);
        opp_value.resize(states);
        for (int s = 0; s < states; ++s) opp_value(s) = rng.uniform01();
    }

    Trajectory trajectory;
    trajectory.steps.reserve(static_cast<std::size_t>(num_iters) + 1);
    trajectory.steps.push_back(
        {0, value, pi1, pi2, player_costs(spec, pi1, pi2).first});

    for (int k = 0; k < num_iters; ++k) {
        mdp1.cost = player_costs(spec, pi1, pi2).first;
        ValueVec next = bellman_apply(mdp1, value);
        pi1 = greedy_policy(mdp1, value);

        switch (opponent.kind) {
            case OpponentStrategy::Kind::fixed_policy:
                pi2 = opponent.fixed;
                break;
            case OpponentStrategy::Kind::vi_minimizer:
                mdp2.cost = player2_cost(spec, pi1);
                pi2 = greedy_policy(mdp2, opp_value);
                opp_value = bellman_apply(mdp2, opp_value);
                break;
            case OpponentStrategy::Kind::vi_maximizer:
                mdp2.cost = player2_cost(spec, pi1);
                pi2 = greedy_policy_max(mdp2, opp_value);
                opp_value = bellman_apply_max(mdp2, opp_value);
                break;
        }

        value = std::move(next);
        trajectory.steps.push_back(
            {k + 1, value, pi1, pi2, player_costs(spec, pi1, pi2).first});
    }
    return trajectory;
}

ContainmentReport check_trajectory_bounds(const Trajectory& trajectory,
                                          const IntervalVector& bounds, int burn_in,
                                          double tol) {
    const int length = static_cast<int>(trajectory.steps.size());
    if (burn_in < 0 || burn_in >= length) {
        std::ostringstream msg;
        msg << "check_trajectory_bounds: burn_in " << burn_in
            << " must be within the trajectory length " << length;
        throw std::invalid_argument(msg.str());
    }
    const IntervalVector inflated = inflate(bounds, tol);

    ContainmentReport report;
    report.burn_in = burn_in;
    report.excess.reserve(trajectory.steps.size());
    for (const auto& step : trajectory.steps) {
        report.excess.push_back(interval_excess(inflated, step.value));
    }
    for (int k = burn_in; k < length; ++k) {
        if (report.excess[k] > 0.0) {
            report.violations.push_back(k);
            report.max_excess = std::max(report.max_excess, report.excess[k]);
        }
    }
    if (!report.violations.empty()) report.first_violation = report.violations.front();
    return report;
}

}  // namespace setvi
