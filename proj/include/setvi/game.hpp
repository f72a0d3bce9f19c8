#pragma once

#include "setvi/intervals.hpp"
#include "setvi/mdp.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace setvi {

/// Two-player zero-sum stochastic game. Both players share the state-action
/// space and transition kernel of `base` (its cost and discount fields are
/// unused here). Each player's effective cost couples to the opponent's
/// policy through the non-negative coupling matrix:
///   player 1 pays nominal + coupling on the pairs the opponent plays,
///   player 2 pays nominal - coupling on the pairs player 1 plays.
struct GameSpec {
    Mdp base;
    Matrix nominal_cost;  ///< S x A
    Matrix coupling;      ///< S x A, entrywise >= 0
    double gamma1 = 0.7;  ///< player 1's discount
    double gamma2 = 0.7;  ///< default opponent discount
};

/// One message per violated invariant; empty means valid.
std::vector<std::string> validate_game(const GameSpec& spec);

/// How player 2's policy evolves between iterations. The two value-iteration
/// kinds run their own Bellman recursion on player 2's effective cost; the
/// maximizer uses the max-Bellman operator (argmax ties break to the lowest
/// action index). Their internal value state initializes uniformly in [0,1]
/// per state, from `seed`.
struct OpponentStrategy {
    enum class Kind { vi_minimizer, vi_maximizer, fixed_policy };

    Kind kind = Kind::vi_minimizer;
    double gamma2 = 0.7;         ///< discount for the VI kinds
    DeterministicPolicy fixed;   ///< policy for the fixed kind
    std::uint64_t seed = 0;      ///< seeds the VI kinds' initial value state

    static OpponentStrategy make_minimizer(double gamma2, std::uint64_t seed = 0);
    static OpponentStrategy make_maximizer(double gamma2, std::uint64_t seed = 0);
    static OpponentStrategy make_fixed(DeterministicPolicy policy);
};

/// One recorded iteration of the coupled game loop.
struct GameStep {
    int k = 0;
    ValueVec value;                 ///< player 1's V^k
    DeterministicPolicy policy_p1;  ///< pi_1^k
    DeterministicPolicy policy_p2;  ///< pi_2^k
    Matrix cost;                    ///< player 1's effective cost C(pi_1^k, pi_2^k)
};

/// Full run record: num_iters + 1 steps including the initial state.
struct Trajectory {
    std::vector<GameStep> steps;
};

/// Effective cost matrices (player 1, player 2) under a policy pair:
///   C1[s,a] = C[s,a] + A[s,a] * 1{pi2(s) == a}
///   C2[s,a] = C[s,a] - A[s,a] * 1{pi1(s) == a}
std::pair<Matrix, Matrix> player_costs(const GameSpec& spec, const DeterministicPolicy& pi1,
                                       const DeterministicPolicy& pi2);

/// Cost intervals containing every effective cost a policy pair can induce:
/// player 1's [C, C + A] and player 2's [C - A, C].
std::pair<IntervalCost, IntervalCost> derive_cost_intervals(const GameSpec& spec);

/// Coupled two-player value iteration. Player 1 applies one Bellman step per
/// iteration under its current effective cost and re-greedifies; player 2's
/// policy then evolves by the opponent strategy. Both policies start as
/// all-action-0.
Trajectory run_two_player_vi(const GameSpec& spec, const OpponentStrategy& opponent,
                             const ValueVec& v0, int num_iters);

/// Result of checking a trajectory against value bounds.
struct ContainmentReport {
    std::optional<int> first_violation;  ///< first k >= burn_in outside the bounds
    std::vector<int> violations;         ///< all violating iterations >= burn_in
    std::vector<double> excess;          ///< per-iteration distance to the inflated bounds
    double max_excess = 0.0;             ///< over iterations >= burn_in
    int burn_in = 0;
};

/// Checks every recorded value from `burn_in` on against inflate(bounds, tol).
ContainmentReport check_trajectory_bounds(const Trajectory& trajectory,
                                          const IntervalVector& bounds, int burn_in,
                                          double tol);

}  // namespace setvi
