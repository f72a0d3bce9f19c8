#pragma once

#include "setvi/mdp.hpp"

#include <cstdint>

namespace setvi {

/// Fixed action order for grid MDPs.
inline constexpr int kActionLeft = 0;
inline constexpr int kActionRight = 1;
inline constexpr int kActionUp = 2;
inline constexpr int kActionDown = 3;
inline constexpr int kGridActions = 4;

/// Rectangular grid with the four move actions. States are indexed
/// row-major from the top-left corner. `seed` drives cost generation only;
/// the transition kernel is a pure function of the geometry.
struct GridSpec {
    int rows = 3;
    int cols = 3;
    double p_main = 0.7;  ///< probability of reaching the intended neighbour
    double p_side = 0.1;  ///< probability of each other existing neighbour
    std::uint64_t seed = 0;
};

/// One message per violated invariant (positive shape with at least two
/// cells, non-negative probabilities, p_main + 3 * p_side == 1).
std::vector<std::string> validate_grid(const GridSpec& spec);

/// Builds the S x (S*4) column-stochastic kernel for the grid walk:
/// the intended neighbour receives p_main and every other existing
/// neighbour p_side.
///
/// Boundary handling: when the intended neighbour does not exist, the
/// column is uniform over all existing neighbours. When the intended
/// neighbour exists but a side neighbour does not, the missing p_side mass
/// goes to the intended neighbour, keeping most probability in the
/// direction of the action. (Only the first rule is forced by the walk's
/// definition; the second is this library's convention.)
Matrix build_grid_transition(const GridSpec& spec);

/// S x A matrix with entries drawn i.i.d. uniformly from [lo, hi],
/// deterministic per seed (row-major draw order).
Matrix random_cost_matrix(int states, int actions, double lo, double hi,
                          std::uint64_t seed);

/// Grid MDP with costs drawn uniformly from [cost_lo, cost_hi] using the
/// spec's seed.
Mdp make_grid_mdp(const GridSpec& spec, double discount, double cost_lo, double cost_hi);

}  // namespace setvi
