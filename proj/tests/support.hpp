#pragma once

// Shared fixtures, generators and reference computations for the test
// suites. The reference (oracle) routines are written with plain loops over
// std::vector so they stay independent of the library's Eigen-based path.

#include "setvi/intervals.hpp"
#include "setvi/mdp.hpp"
#include "setvi/rng.hpp"
#include "setvi/set_bellman.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace testsupport {

/// Canonical 2-state, 2-action fixture. Transition columns (state, action):
///   (0,0) -> (0.9, 0.1)   (0,1) -> (0.1, 0.9)
///   (1,0) -> (0.9, 0.1)   (1,1) -> (0.5, 0.5)
/// Nominal costs [[4, 5], [3, 1]]; the interval variant widens them by
/// (0.6, 0.7, 0.5, 1.0). The discount 0.9 is this suite's choice.
inline setvi::Mdp two_state_mdp(double discount = 0.9) {
    setvi::Mdp mdp;
    mdp.num_states = 2;
    mdp.num_actions = 2;
    mdp.transition = setvi::Matrix(2, 4);
    mdp.transition << 0.9, 0.1, 0.9, 0.5,
                      0.1, 0.9, 0.1, 0.5;
    mdp.cost = setvi::Matrix(2, 2);
    mdp.cost << 4.0, 5.0,
                3.0, 1.0;
    mdp.discount = discount;
    return mdp;
}

inline setvi::MdpFamily two_state_family(double discount = 0.9) {
    setvi::Mdp base = two_state_mdp(discount);
    setvi::Matrix spread(2, 2);
    spread << 0.6, 0.7,
              0.5, 1.0;
    setvi::IntervalCost costs(base.cost - spread, base.cost + spread);
    return setvi::MdpFamily{std::move(base), std::move(costs)};
}

/// Single-state MDP with one self-loop per action.
inline setvi::Mdp self_loop_mdp(const std::vector<double>& action_costs, double discount) {
    setvi::Mdp mdp;
    mdp.num_states = 1;
    mdp.num_actions = static_cast<int>(action_costs.size());
    mdp.transition = setvi::Matrix::Ones(1, mdp.num_actions);
    mdp.cost = setvi::Matrix(1, mdp.num_actions);
    for (int a = 0; a < mdp.num_actions; ++a) mdp.cost(0, a) = action_costs[a];
    mdp.discount = discount;
    return mdp;
}

inline setvi::Mdp random_mdp(setvi::Rng& rng, int num_states, int num_actions,
                             double gamma_lo = 0.3, double gamma_hi = 0.95) {
    setvi::Mdp mdp;
    mdp.num_states = num_states;
    mdp.num_actions = num_actions;
    mdp.transition = setvi::Matrix(num_states, num_states * num_actions);
    for (int col = 0; col < num_states * num_actions; ++col) {
        double sum = 0.0;
        for (int sp = 0; sp < num_states; ++sp) {
            const double raw = rng.uniform(0.05, 1.0);
            mdp.transition(sp, col) = raw;
            sum += raw;
        }
        mdp.transition.col(col) /= sum;
    }
    mdp.cost = setvi::Matrix(num_states, num_actions);
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) mdp.cost(s, a) = rng.uniform(0.0, 1.0);
    }
    mdp.discount = rng.uniform(gamma_lo, gamma_hi);
    return mdp;
}

inline setvi::MdpFamily random_family(setvi::Rng& rng, int num_states, int num_actions,
                                      double max_width = 0.5, double gamma_lo = 0.3,
                                      double gamma_hi = 0.95) {
    setvi::Mdp base = random_mdp(rng, num_states, num_actions, gamma_lo, gamma_hi);
    setvi::Matrix lower(num_states, num_actions);
    setvi::Matrix upper(num_states, num_actions);
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) {
            const double width = rng.uniform(0.0, max_width);
            lower(s, a) = base.cost(s, a) - width / 2.0;
            upper(s, a) = base.cost(s, a) + width / 2.0;
        }
    }
    return setvi::MdpFamily{std::move(base), setvi::IntervalCost(lower, upper)};
}

inline setvi::ValueVec random_value(setvi::Rng& rng, int size, double lo, double hi) {
    setvi::ValueVec v(size);
    for (int i = 0; i < size; ++i) v(i) = rng.uniform(lo, hi);
    return v;
}

inline setvi::IntervalVector random_interval_vector(setvi::Rng& rng, int size,
                                                    double center_lo, double center_hi,
                                                    double max_width) {
    setvi::ValueVec lower(size);
    setvi::ValueVec upper(size);
    for (int i = 0; i < size; ++i) {
        const double center = rng.uniform(center_lo, center_hi);
        const double width = rng.uniform(0.0, max_width);
        lower(i) = center - width / 2.0;
        upper(i) = center + width / 2.0;
    }
    return {std::move(lower), std::move(upper)};
}

// ---------------------------------------------------------------------------
// Reference computations (plain loops, no Eigen expressions)
// ---------------------------------------------------------------------------

/// Direct evaluation of one Bellman application.
inline std::vector<double> oracle_bellman(const setvi::Mdp& mdp,
                                          const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(mdp.num_states));
    for (int s = 0; s < mdp.num_states; ++s) {
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < mdp.num_actions; ++a) {
            double q = mdp.cost(s, a);
            for (int sp = 0; sp < mdp.num_states; ++sp) {
                q += mdp.discount * mdp.transition(sp, s * mdp.num_actions + a) *
                     v[static_cast<std::size_t>(sp)];
            }
            best = std::min(best, q);
        }
        out[static_cast<std::size_t>(s)] = best;
    }
    return out;
}

/// Q-table at v, same plain-loop evaluation.
inline std::vector<std::vector<double>> oracle_q_values(const setvi::Mdp& mdp,
                                                        const std::vector<double>& v) {
    std::vector<std::vector<double>> q(static_cast<std::size_t>(mdp.num_states));
    for (int s = 0; s < mdp.num_states; ++s) {
        q[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(mdp.num_actions));
        for (int a = 0; a < mdp.num_actions; ++a) {
            double value = mdp.cost(s, a);
            for (int sp = 0; sp < mdp.num_states; ++sp) {
                value += mdp.discount * mdp.transition(sp, s * mdp.num_actions + a) *
                         v[static_cast<std::size_t>(sp)];
            }
            q[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)] = value;
        }
    }
    return q;
}

/// Stationary value of a policy on a 2-state MDP via Cramer's rule on
///   (I - gamma * T) V = c.
inline std::array<double, 2> oracle_policy_value_2(const setvi::Mdp& mdp, int action0,
                                                   int action1) {
    const double t00 = mdp.transition(0, 0 * mdp.num_actions + action0);
    const double t01 = mdp.transition(1, 0 * mdp.num_actions + action0);
    const double t10 = mdp.transition(0, 1 * mdp.num_actions + action1);
    const double t11 = mdp.transition(1, 1 * mdp.num_actions + action1);
    const double a = 1.0 - mdp.discount * t00;
    const double b = -mdp.discount * t01;
    const double c = -mdp.discount * t10;
    const double d = 1.0 - mdp.discount * t11;
    const double e = mdp.cost(0, action0);
    const double f = mdp.cost(1, action1);
    const double det = a * d - b * c;
    return {(e * d - b * f) / det, (a * f - c * e) / det};
}

/// Exact Hausdorff distance between finite point sets, quadratic scan.
inline double oracle_hausdorff_points(const std::vector<std::vector<double>>& a,
                                      const std::vector<std::vector<double>>& b) {
    auto directed = [](const std::vector<std::vector<double>>& from,
                       const std::vector<std::vector<double>>& to) {
        double worst = 0.0;
        for (const auto& x : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& y : to) {
                double dist = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    dist = std::max(dist, std::abs(x[i] - y[i]));
                }
                nearest = std::min(nearest, dist);
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

/// Hausdorff distance between two boxes estimated on a dense grid:
/// `points` samples per dimension, sup-inf over all grid-point pairs.
/// Accurate to within the larger grid spacing.
inline double oracle_box_hausdorff_grid(const setvi::IntervalVector& x,
                                        const setvi::IntervalVector& y, int points) {
    const int dims = static_cast<int>(x.size());
    auto enumerate = [&](const setvi::IntervalVector& box) {
        std::vector<std::vector<double>> grid;
        std::vector<int> index(static_cast<std::size_t>(dims), 0);
        while (true) {
            std::vector<double> point(static_cast<std::size_t>(dims));
            for (int d = 0; d < dims; ++d) {
                const double lo = box.lower(d);
                const double hi = box.upper(d);
                point[static_cast<std::size_t>(d)] =
                    points > 1 ? lo + (hi - lo) * index[static_cast<std::size_t>(d)] /
                                          (points - 1)
                               : lo;
            }
            grid.push_back(std::move(point));
            int d = 0;
            while (d < dims) {
                if (++index[static_cast<std::size_t>(d)] < points) break;
                index[static_cast<std::size_t>(d)] = 0;
                ++d;
            }
            if (d == dims) break;
        }
        return grid;
    };
    return oracle_hausdorff_points(enumerate(x), enumerate(y));
}

/// Largest grid spacing across the dimensions of both boxes, for the grid
/// oracle's tolerance.
inline double max_grid_spacing(const setvi::IntervalVector& x, const setvi::IntervalVector& y,
                               int points) {
    double spacing = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        spacing = std::max(spacing, (x.upper(i) - x.lower(i)) / (points - 1));
        spacing = std::max(spacing, (y.upper(i) - y.lower(i)) / (points - 1));
    }
    return spacing;
}

}  // namespace testsupport
