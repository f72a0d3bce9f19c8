#include "setvi/set_bellman.hpp"

#include "setvi/rng.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace setvi {

Mdp MdpFamily::with_cost(Matrix cost) const {
    Mdp mdp = base;
    mdp.cost = std::move(cost);
    return mdp;
}

std::vector<std::string> validate_family(const MdpFamily& family) {
    Mdp probe = family.base;
    probe.cost = family.cost_set.lower;  // validate structure with a cost of the right shape
    std::vector<std::string> violations = validate_mdp(probe);
    if (family.cost_set.lower.rows() != family.base.num_states ||
        family.cost_set.lower.cols() != family.base.num_actions) {
        std::ostringstream msg;
        msg << "cost set is " << family.cost_set.lower.rows() << "x"
            << family.cost_set.lower.cols() << ", expected " << family.base.num_states
            << "x" << family.base.num_actions;
        violations.push_back(msg.str());
    }
    return violations;
}

IntervalVector set_bellman_apply(const MdpFamily& family, const IntervalVector& v) {
    if (v.size() != family.base.num_states) {
        std::ostringstream msg;
        msg << "set_bellman_apply: interval vector has length " << v.size()
            << ", expected " << family.base.num_states;
        throw std::invalid_argument(msg.str());
    }
    ValueVec lower = bellman_apply(family.lower_mdp(), v.lower);
    ValueVec upper = bellman_apply(family.upper_mdp(), v.upper);
    return {std::move(lower), std::move(upper)};
}

SetSolveReport set_value_iteration(const MdpFamily& family, const IntervalVector& v0,
                                   double epsilon, long max_iterations) {
    if (epsilon <= 0.0) {
        throw std::invalid_argument("set_value_iteration: epsilon must be > 0");
    }
    const double gamma = family.base.discount;
    const double threshold = epsilon * (1.0 - gamma) / (2.0 * gamma);

    IntervalVector current = v0;
    long iterations = 0;
    double residual = std::numeric_limits<double>::infinity();
    while (true) {
        IntervalVector next = set_bellman_apply(family, current);
        residual = hausdorff_interval(next, current);
        current = std::move(next);
        ++iterations;
        if (residual < threshold) break;
        if (iterations >= max_iterations) {
            std::ostringstream msg;
            msg << "set_value_iteration: no convergence after " << max_iterations
                << " iterations (residual " << residual << ")";
            throw ConvergenceError(msg.str());
        }
    }
    return SetSolveReport{std::move(current), iterations, residual};
}

Matrix sample_cost(const MdpFamily& family, std::uint64_t seed) {
    Rng rng(seed);
    const auto& lo = family.cost_set.lower;
    const auto& hi = family.cost_set.upper;
    Matrix cost(lo.rows(), lo.cols());
    for (Eigen::Index r = 0; r < lo.rows(); ++r) {
        for (Eigen::Index c = 0; c < lo.cols(); ++c) {
            cost(r, c) = rng.uniform(lo(r, c), hi(r, c));
        }
    }
    return cost;
}

std::vector<double> monte_carlo_convergence(const MdpFamily& family, const ValueVec& v0,
                                            int num_steps, std::uint64_t seed,
                                            double epsilon) {
    if (num_steps < 1) {
        throw std::invalid_argument("monte_carlo_convergence: num_steps must be >= 1");
    }
    const auto reference =
        set_value_iteration(family, IntervalVector::zero(family.base.num_states), epsilon);

    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(num_steps) + 1);
    ValueVec v = v0;
    distances.push_back(interval_excess(reference.fixed_point, v));
    for (int step = 0; step < num_steps; ++step) {
        const Matrix cost = sample_cost(family, derive_seed(seed, static_cast<std::uint64_t>(step)));
        v = bellman_apply(family.with_cost(cost), v);
        distances.push_back(interval_excess(reference.fixed_point, v));
    }
    return distances;
}

double check_contraction(const MdpFamily& family, const IntervalVector& x,
                         const IntervalVector& y) {
    const double before = hausdorff_interval(x, y);
    if (before == 0.0) {
        throw std::invalid_argument("check_contraction: input intervals are identical");
    }
    const double after =
        hausdorff_interval(set_bellman_apply(family, x), set_bellman_apply(family, y));
    return after / before;
}

}  // namespace setvi
