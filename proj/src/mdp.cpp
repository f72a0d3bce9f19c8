#include "setvi/mdp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace setvi {

namespace {

void check_value_size(const Mdp& mdp, const ValueVec& v, const char* what) {
    if (v.size() != mdp.num_states) {
        std::ostringstream msg;
        msg << what << ": value vector has length " << v.size() << ", expected "
            << mdp.num_states;
        throw std::invalid_argument(msg.str());
    }
}

void check_policy(const Mdp& mdp, const DeterministicPolicy& pi, const char* what) {
    if (static_cast<int>(pi.action.size()) != mdp.num_states) {
        std::ostringstream msg;
        msg << what << ": policy has length " << pi.action.size() << ", expected "
            << mdp.num_states;
        throw std::invalid_argument(msg.str());
    }
    for (int s = 0; s < mdp.num_states; ++s) {
        if (pi.action[s] < 0 || pi.action[s] >= mdp.num_actions) {
            std::ostringstream msg;
            msg << what << ": action " << pi.action[s] << " at state " << s
                << " is outside [0, " << mdp.num_actions << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

}  // namespace

std::vector<std::string> validate_mdp(const Mdp& mdp) {
    std::vector<std::string> violations;
    if (mdp.num_states <= 0) violations.push_back("num_states must be positive");
    if (mdp.num_actions <= 0) violations.push_back("num_actions must be positive");
    if (!violations.empty()) return violations;

    const int states = mdp.num_states;
    const int actions = mdp.num_actions;

    if (mdp.transition.rows() != states ||
        mdp.transition.cols() != static_cast<Eigen::Index>(states) * actions) {
        std::ostringstream msg;
        msg << "transition matrix is " << mdp.transition.rows() << "x"
            << mdp.transition.cols() << ", expected " << states << "x" << states * actions;
        violations.push_back(msg.str());
    } else {
        for (int s = 0; s < states; ++s) {
            for (int a = 0; a < actions; ++a) {
                const auto col = mdp.transition.col(mdp.column(s, a));
                bool bad_entry = false;
                for (int sp = 0; sp < states; ++sp) {
                    if (!std::isfinite(col(sp)) || col(sp) < 0.0) bad_entry = true;
                }
                if (bad_entry) {
                    std::ostringstream msg;
                    msg << "transition column (" << s << "," << a
                        << ") has a negative or non-finite entry";
                    violations.push_back(msg.str());
                    continue;
                }
                const double sum = col.sum();
                if (std::abs(sum - 1.0) > kStochasticTol) {
                    std::ostringstream msg;
                    msg << "column (" << s << "," << a << ") not stochastic: sums to "
                        << sum;
                    violations.push_back(msg.str());
                }
            }
        }
    }

    if (mdp.cost.rows() != states || mdp.cost.cols() != actions) {
        std::ostringstream msg;
        msg << "cost matrix is " << mdp.cost.rows() << "x" << mdp.cost.cols()
            << ", expected " << states << "x" << actions;
        violations.push_back(msg.str());
    } else if (!mdp.cost.allFinite()) {
        violations.push_back("cost matrix has a non-finite entry");
    }

    if (!(mdp.discount > 0.0 && mdp.discount < 1.0)) {
        std::ostringstream msg;
        msg << "discount out of range (0,1): got " << mdp.discount;
        violations.push_back(msg.str());
    }
    return violations;
}

void require_valid(const Mdp& mdp) {
    const auto violations = validate_mdp(mdp);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid MDP:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw std::invalid_argument(msg.str());
}

void renormalize_transition(Mdp& mdp, double tol) {
    for (int s = 0; s < mdp.num_states; ++s) {
        for (int a = 0; a < mdp.num_actions; ++a) {
            auto col = mdp.transition.col(mdp.column(s, a));
            const double sum = col.sum();
            if (std::abs(sum - 1.0) > tol || sum <= 0.0) {
                std::ostringstream msg;
                msg << "column (" << s << "," << a << ") sums to " << sum
                    << ", outside the renormalization tolerance " << tol;
                throw std::invalid_argument(msg.str());
            }
            col /= sum;
        }
    }
}

ValueVec bellman_apply(const Mdp& mdp, const ValueVec& v) {
    check_value_size(mdp, v, "bellman_apply");
    ValueVec out(mdp.num_states);
    for (int s = 0; s < mdp.num_states; ++s) {
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < mdp.num_actions; ++a) {
            const double q =
                mdp.cost(s, a) + mdp.discount * mdp.transition.col(mdp.column(s, a)).dot(v);
            if (q < best) best = q;
        }
        out(s) = best;
    }
    return out;
}

DeterministicPolicy greedy_policy(const Mdp& mdp, const ValueVec& v) {
    check_value_size(mdp, v, "greedy_policy");
    DeterministicPolicy pi;
    pi.action.resize(mdp.num_states);
    for (int s = 0; s < mdp.num_states; ++s) {
        double best = std::numeric_limits<double>::infinity();
        int best_action = 0;
        for (int a = 0; a < mdp.num_actions; ++a) {
            const double q =
                mdp.cost(s, a) + mdp.discount * mdp.transition.col(mdp.column(s, a)).dot(v);
            if (q < best) {
                best = q;
                best_action = a;
            }
        }
        pi.action[s] = best_action;
    }
    return pi;
}

ValueVec policy_cost(const Mdp& mdp, const DeterministicPolicy& pi) {
    check_policy(mdp, pi, "policy_cost");
    ValueVec out(mdp.num_states);
    for (int s = 0; s < mdp.num_states; ++s) out(s) = mdp.cost(s, pi.action[s]);
    return out;
}

ValueVec policy_value(const Mdp& mdp, const DeterministicPolicy& pi) {
    check_policy(mdp, pi, "policy_value");
    const int states = mdp.num_states;
    // chain(s, s') = P[s', (s, pi(s))], the Markov chain induced by pi.
    Matrix chain(states, states);
    for (int s = 0; s < states; ++s) {
        chain.row(s) = mdp.transition.col(mdp.column(s, pi.action[s])).transpose();
    }
    const Matrix system = Matrix::Identity(states, states) - mdp.discount * chain;
    return system.partialPivLu().solve(policy_cost(mdp, pi));
}

SolveReport value_iteration(const Mdp& mdp, const ValueVec& v0, double epsilon,
                            long max_iterations) {
    if (epsilon <= 0.0) throw std::invalid_argument("value_iteration: epsilon must be > 0");
    check_value_size(mdp, v0, "value_iteration");

    const double threshold = epsilon * (1.0 - mdp.discount) / (2.0 * mdp.discount);
    ValueVec v = v0;
    long iterations = 0;
    double residual = std::numeric_limits<double>::infinity();
    while (true) {
        ValueVec next = bellman_apply(mdp, v);
        residual = (next - v).lpNorm<Eigen::Infinity>();
        v = std::move(next);
        ++iterations;
        if (residual < threshold) break;
        if (iterations >= max_iterations) {
            std::ostringstream msg;
            msg << "value_iteration: no convergence after " << max_iterations
                << " iterations (residual " << residual << ", threshold " << threshold
                << ")";
            throw ConvergenceError(msg.str());
        }
    }
    return SolveReport{v, greedy_policy(mdp, v), iterations, residual};
}

ValueVec enumerate_optimal(const Mdp& mdp) {
    constexpr double kMaxPolicies = 1e6;
    double policy_count = 1.0;
    for (int s = 0; s < mdp.num_states; ++s) {
        policy_count *= mdp.num_actions;
        if (policy_count > kMaxPolicies) {
            std::ostringstream msg;
            msg << "enumerate_optimal: A^S = " << mdp.num_actions << "^" << mdp.num_states
                << " exceeds the enumeration bound 10^6";
            throw std::invalid_argument(msg.str());
        }
    }

    DeterministicPolicy pi;
    pi.action.assign(mdp.num_states, 0);
    ValueVec best = policy_value(mdp, pi);
    // Odometer over all deterministic policies.
    while (true) {
        int s = 0;
        while (s < mdp.num_states) {
            if (++pi.action[s] < mdp.num_actions) break;
            pi.action[s] = 0;
            ++s;
        }
        if (s == mdp.num_states) break;
        best = best.cwiseMin(policy_value(mdp, pi));
    }
    return best;
}

}  // namespace setvi
