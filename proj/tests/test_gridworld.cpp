#include "setvi/gridworld.hpp"

#include "setvi/mdp.hpp"

#include <doctest.h>

#include <cmath>

using namespace setvi;

TEST_CASE("interior cells send p_main ahead and p_side to the other neighbours") {
    const GridSpec spec{3, 3, 0.7, 0.1, 0};
    const Matrix transition = build_grid_transition(spec);

    const int center = 4;  // (1,1)
    const auto col = transition.col(center * kGridActions + kActionLeft);
    CHECK(col(3) == 0.7);   // left neighbour (1,0)
    CHECK(col(5) == 0.1);   // right (1,2)
    CHECK(col(1) == 0.1);   // up (0,1)
    CHECK(col(7) == 0.1);   // down (2,1)
    CHECK(col(4) == 0.0);   // never stays in place
}

TEST_CASE("an unavailable action spreads uniformly over existing neighbours") {
    const GridSpec spec{3, 3, 0.7, 0.1, 0};
    const Matrix transition = build_grid_transition(spec);

    // Top-left corner: neighbours are right (state 1) and down (state 3).
    const auto col = transition.col(0 * kGridActions + kActionLeft);
    CHECK(col(1) == 0.5);
    CHECK(col(3) == 0.5);
    CHECK(col.sum() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("missing side neighbours reinforce the intended direction") {
    const GridSpec spec{3, 3, 0.7, 0.1, 0};
    const Matrix transition = build_grid_transition(spec);

    // Top-left corner, action right: left and up are missing, so their mass
    // joins the intended neighbour.
    const auto col = transition.col(0 * kGridActions + kActionRight);
    CHECK(col(1) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(col(3) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("every generated grid passes the stochasticity checks") {
    const std::pair<int, int> shapes[] = {{3, 3}, {2, 5}, {4, 1}, {1, 2}, {6, 4}};
    for (const auto& shape : shapes) {
        const GridSpec spec{shape.first, shape.second, 0.7, 0.1, 0};
        const Mdp mdp = make_grid_mdp(spec, 0.9, 0.0, 1.0);
        CHECK(validate_mdp(mdp).empty());
        CHECK((mdp.transition.array() >= 0.0).all());
    }
}

TEST_CASE("grid validation rejects broken specs") {
    CHECK_FALSE(validate_grid(GridSpec{0, 3, 0.7, 0.1, 0}).empty());
    CHECK_FALSE(validate_grid(GridSpec{1, 1, 0.7, 0.1, 0}).empty());
    CHECK_FALSE(validate_grid(GridSpec{3, 3, 0.8, 0.1, 0}).empty());  // mass != 1
    CHECK_FALSE(validate_grid(GridSpec{3, 3, 1.3, -0.1, 0}).empty());
    CHECK(validate_grid(GridSpec{3, 3, 0.4, 0.2, 0}).empty());
    CHECK_THROWS_AS(build_grid_transition(GridSpec{1, 1, 0.7, 0.1, 0}),
                    std::invalid_argument);
}

TEST_CASE("transitions depend on geometry only, not on the seed") {
    const Matrix a = build_grid_transition(GridSpec{3, 4, 0.7, 0.1, 0});
    const Matrix b = build_grid_transition(GridSpec{3, 4, 0.7, 0.1, 12345});
    CHECK(a == b);
}

TEST_CASE("random_cost_matrix is seeded and bounded") {
    CHECK(random_cost_matrix(3, 2, 0.0, 0.0, 9) == Matrix::Zero(3, 2));
    CHECK(random_cost_matrix(4, 4, 0.0, 1.0, 9) == random_cost_matrix(4, 4, 0.0, 1.0, 9));
    CHECK(random_cost_matrix(4, 4, 0.0, 1.0, 9) != random_cost_matrix(4, 4, 0.0, 1.0, 10));
    CHECK_THROWS_AS(random_cost_matrix(2, 2, 1.0, 0.0, 9), std::invalid_argument);

    const Matrix big = random_cost_matrix(100, 100, 0.0, 1.0, 9);
    CHECK(big.minCoeff() >= 0.0);
    CHECK(big.maxCoeff() <= 1.0);
    CHECK(std::abs(big.mean() - 0.5) < 0.02);
}
