#include "setvi/gridworld.hpp"

#include "setvi/rng.hpp"

#include <cmath>
#include <sstream>

namespace setvi {

namespace {

// Row/column deltas in action order: left, right, up, down.
constexpr int kRowDelta[kGridActions] = {0, 0, -1, 1};
constexpr int kColDelta[kGridActions] = {-1, 1, 0, 0};

}  // namespace

std::vector<std::string> validate_grid(const GridSpec& spec) {
    std::vector<std::string> violations;
    if (spec.rows <= 0 || spec.cols <= 0) {
        violations.push_back("grid shape must be positive");
    } else if (spec.rows * spec.cols < 2) {
        violations.push_back("grid must have at least 2 cells");
    }
    if (spec.p_main < 0.0 || spec.p_side < 0.0) {
        violations.push_back("probabilities must be non-negative");
    }
    if (std::abs(spec.p_main + 3.0 * spec.p_side - 1.0) > kStochasticTol) {
        std::ostringstream msg;
        msg << "p_main + 3*p_side must equal 1, got "
            << spec.p_main + 3.0 * spec.p_side;
        violations.push_back(msg.str());
    }
    return violations;
}

Matrix build_grid_transition(const GridSpec& spec) {
    const auto violations = validate_grid(spec);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid grid spec:";
        for (const auto& v : violations) msg << "\n  - " << v;
        throw std::invalid_argument(msg.str());
    }

    const int states = spec.rows * spec.cols;
    Matrix transition = Matrix::Zero(states, states * kGridActions);

    for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
            const int state = r * spec.cols + c;
            // Existing neighbours in action order; -1 marks a missing one.
            int neighbour[kGridActions];
            int neighbour_count = 0;
            for (int d = 0; d < kGridActions; ++d) {
                const int nr = r + kRowDelta[d];
                const int nc = c + kColDelta[d];
                const bool exists = nr >= 0 && nr < spec.rows && nc >= 0 && nc < spec.cols;
                neighbour[d] = exists ? nr * spec.cols + nc : -1;
                if (exists) ++neighbour_count;
            }

            for (int a = 0; a < kGridActions; ++a) {
                const int col = state * kGridActions + a;
                if (neighbour[a] < 0) {
                    // Intended direction unavailable: uniform over the
                    // existing neighbours.
                    for (int d = 0; d < kGridActions; ++d) {
                        if (neighbour[d] >= 0) {
                            transition(neighbour[d], col) += 1.0 / neighbour_count;
                        }
                    }
                    continue;
                }
                double intended_mass = spec.p_main;
                for (int d = 0; d < kGridActions; ++d) {
                    if (d == a) continue;
                    if (neighbour[d] >= 0) {
                        transition(neighbour[d], col) += spec.p_side;
                    } else {
                        intended_mass += spec.p_side;
                    }
                }
                transition(neighbour[a], col) += intended_mass;
            }
        }
    }
    return transition;
}

Matrix random_cost_matrix(int states, int actions, double lo, double hi,
                          std::uint64_t seed) {
    if (states <= 0 || actions <= 0) {
        throw std::invalid_argument("random_cost_matrix: shape must be positive");
    }
    if (lo > hi) {
        std::ostringstream msg;
        msg << "random_cost_matrix: lo " << lo << " exceeds hi " << hi;
        throw std::invalid_argument(msg.str());
    }
    Rng rng(seed);
    Matrix cost(states, actions);
    for (int s = 0; s < states; ++s) {
        for (int a = 0; a < actions; ++a) {
            cost(s, a) = rng.uniform(lo, hi);
        }
    }
    return cost;
}

Mdp make_grid_mdp(const GridSpec& spec, double discount, double cost_lo, double cost_hi) {
    Mdp mdp;
    mdp.num_states = spec.rows * spec.cols;
    mdp.num_actions = kGridActions;
    mdp.transition = build_grid_transition(spec);
    mdp.cost = random_cost_matrix(mdp.num_states, kGridActions, cost_lo, cost_hi, spec.seed);
    mdp.discount = discount;
    return mdp;
}

}  // namespace setvi
