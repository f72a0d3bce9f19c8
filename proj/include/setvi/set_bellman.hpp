#pragma once

#include "setvi/intervals.hpp"
#include "setvi/mdp.hpp"

#include <cstdint>
#include <vector>

namespace setvi {

/// A family of MDPs sharing states, actions, transitions and discount,
/// with the cost matrix ranging over a componentwise interval set. The
/// cost field of `base` is ignored by every family operation.
struct MdpFamily {
    Mdp base;
    IntervalCost cost_set;

    Mdp with_cost(Matrix cost) const;
    Mdp lower_mdp() const { return with_cost(cost_set.lower); }
    Mdp upper_mdp() const { return with_cost(cost_set.upper); }
};

/// One message per violated invariant (base structure ignoring cost,
/// cost-set shape agreement); empty means valid.
std::vector<std::string> validate_family(const MdpFamily& family);

struct SetSolveReport {
    IntervalVector fixed_point;
    long iterations = 0;
    double residual = 0.0;  ///< final Hausdorff distance between iterates
};

/// The set-based Bellman operator on interval sets. Its image is again an
/// interval, with endpoints obtained by running the standard operator on
/// the endpoint costs:
///   [ bellman(lower cost, v.lower), bellman(upper cost, v.upper) ].
IntervalVector set_bellman_apply(const MdpFamily& family, const IntervalVector& v);

/// Iterates set_bellman_apply until the Hausdorff distance between
/// consecutive iterates drops below epsilon * (1 - discount) / (2 * discount);
/// the returned interval is then within epsilon/2 (Hausdorff) of the unique
/// fixed-point set. Equivalently, the lower/upper tracks are the standard
/// value-iteration runs under the endpoint costs.
///
/// The result is a convergence estimate, not an over-approximation of the
/// fixed-point set: callers wanting a certified enclosure should inflate it
/// by epsilon / 2.
SetSolveReport set_value_iteration(const MdpFamily& family, const IntervalVector& v0,
                                   double epsilon,
                                   long max_iterations = kDefaultMaxIterations);

/// Cost matrix drawn entrywise uniformly from the family's interval set,
/// deterministic per seed. Entries are drawn in row-major order.
Matrix sample_cost(const MdpFamily& family, std::uint64_t seed);

/// Runs value iteration with a freshly sampled cost at every step,
///   V^{k+1} = bellman(C^k, V^k),  C^k ~ cost_set,
/// and returns the distance from each iterate to the family's fixed-point
/// interval (computed internally with `epsilon`), including the initial
/// point: num_steps + 1 entries. Per-step costs use sub-seeds derived from
/// `seed`, so the schedule is reproducible.
std::vector<double> monte_carlo_convergence(const MdpFamily& family, const ValueVec& v0,
                                            int num_steps, std::uint64_t seed,
                                            double epsilon = 1e-6);

/// Ratio of Hausdorff distances d_H(F(x), F(y)) / d_H(x, y); at most the
/// discount factor for every valid pair. Rejects pairs at distance zero.
double check_contraction(const MdpFamily& family, const IntervalVector& x,
                         const IntervalVector& y);

}  // namespace setvi
