#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace setvi {

using ValueVec = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Column-sum tolerance for stochasticity checks.
inline constexpr double kStochasticTol = 1e-9;

/// Iteration cap for the fixed-point solvers. Generous enough for any sane
/// discount factor; exists so that misuse (discount extremely close to 1)
/// fails with a diagnosable error instead of spinning.
inline constexpr long kDefaultMaxIterations = 1'000'000;

/// Thrown when an iterative solver hits its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Discounted infinite-horizon MDP over finite state and action sets.
///
/// The transition kernel is column-stochastic: column (s, a), stored at
/// index s * num_actions + a, holds the distribution over successor states
/// for that state-action pair.
struct Mdp {
    int num_states = 0;
    int num_actions = 0;
    Matrix transition;  ///< S x (S*A); each column sums to 1
    Matrix cost;        ///< S x A
    double discount = 0.0;

    int column(int state, int action) const { return state * num_actions + action; }
};

/// One action index per state.
struct DeterministicPolicy {
    std::vector<int> action;

    bool operator==(const DeterministicPolicy&) const = default;
};

struct SolveReport {
    ValueVec value;
    DeterministicPolicy policy;
    long iterations = 0;
    double residual = 0.0;  ///< final ||V^{k+1} - V^k||_inf
};

/// Returns one message per violated structural invariant; empty means valid.
/// Checked: positive dimensions, matrix shapes, non-negative and finite
/// transition entries, column sums within kStochasticTol of 1, finite costs,
/// discount in (0, 1).
std::vector<std::string> validate_mdp(const Mdp& mdp);

/// Throws std::invalid_argument listing every violation when the MDP is
/// structurally invalid.
void require_valid(const Mdp& mdp);

/// Rescales every transition column whose sum deviates from 1 by at most
/// `tol` so that it sums to 1 exactly (up to rounding). Columns further off
/// than `tol` are an error. Only ever invoked on explicit user request.
void renormalize_transition(Mdp& mdp, double tol = 1e-6);

/// One application of the Bellman operator:
///   out_s = min_a ( C[s,a] + discount * sum_s' P[s',(s,a)] v_s' ).
ValueVec bellman_apply(const Mdp& mdp, const ValueVec& v);

/// Greedy policy at v: action[s] = argmin_a of the same state-action values
/// bellman_apply minimizes. Ties break to the lowest action index.
DeterministicPolicy greedy_policy(const Mdp& mdp, const ValueVec& v);

/// Per-state cost of following pi: out_s = C[s, pi.action[s]].
ValueVec policy_cost(const Mdp& mdp, const DeterministicPolicy& pi);

/// Stationary value of a fixed policy: the unique V solving
///   V = policy_cost(pi) + discount * T V
/// where T[s,s'] = P[s',(s,pi.action[s])]. T is row-stochastic, so
/// I - discount * T is always invertible; a dense direct solve is used.
ValueVec policy_value(const Mdp& mdp, const DeterministicPolicy& pi);

/// Iterates V <- bellman_apply(V) until
///   ||V^{k+1} - V^k||_inf < epsilon * (1 - discount) / (2 * discount),
/// which guarantees the returned value is within epsilon/2 (inf-norm) of the
/// true fixed point. Reports the greedy policy at the returned value.
/// Throws std::invalid_argument for epsilon <= 0 and ConvergenceError when
/// the iteration cap is exceeded.
SolveReport value_iteration(const Mdp& mdp, const ValueVec& v0, double epsilon,
                            long max_iterations = kDefaultMaxIterations);

/// Ground-truth optimum by exhaustive enumeration: evaluates policy_value
/// for every deterministic policy and returns the componentwise minimum.
/// Rejects instances with more than 10^6 policies (A^S).
ValueVec enumerate_optimal(const Mdp& mdp);

}  // namespace setvi
