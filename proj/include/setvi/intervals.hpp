#pragma once

#include "setvi/mdp.hpp"

#include <vector>

namespace setvi {

/// Closed scalar interval [lo, hi]. Reversed bounds are rejected at
/// construction, never silently swapped.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo, double hi);

    bool operator==(const Interval&) const = default;
};

/// [a,b] + [c,d] = [a+c, b+d].
Interval interval_add(Interval x, Interval y);

/// alpha * [a,b] = [alpha*a, alpha*b]; defined for alpha >= 0 only.
Interval interval_scale(double alpha, Interval x);

/// Endpoint-wise difference [a,b] - [c,d] = [a-c, b-d].
///
/// Note: this is NOT the classical interval-arithmetic rule [a-d, b-c]
/// and is not the set image of {x - y}; it is the endpoint rule matching
/// interval_add, kept because the solver's endpoint recursions subtract
/// like bounds from like bounds. Nothing on the solve path calls it.
Interval interval_sub(Interval x, Interval y);

/// Smallest interval containing {min(x, y) : x in [a,b], y in [c,d]},
/// which is [min(a,c), min(b,d)].
Interval interval_min(Interval x, Interval y);

/// Componentwise box of value functions: {v : lower <= v <= upper}.
struct IntervalVector {
    ValueVec lower;
    ValueVec upper;

    IntervalVector(ValueVec lower, ValueVec upper);
    static IntervalVector degenerate(const ValueVec& v) { return {v, v}; }
    static IntervalVector zero(int size) {
        return {ValueVec::Zero(size), ValueVec::Zero(size)};
    }

    Eigen::Index size() const { return lower.size(); }
};

/// Componentwise box of cost matrices.
struct IntervalCost {
    Matrix lower;
    Matrix upper;

    IntervalCost(Matrix lower, Matrix upper);
    static IntervalCost degenerate(const Matrix& c) { return {c, c}; }
};

/// Hausdorff distance between two boxes under the inf-norm, computed in
/// closed form on the endpoints:
///   max( ||x.lower - y.lower||_inf, ||x.upper - y.upper||_inf ).
double hausdorff_interval(const IntervalVector& x, const IntervalVector& y);

/// Exact Hausdorff distance between two finite point sets under the
/// inf-norm (max of the two directed sup-inf distances). Also serves as the
/// sampling estimator for general compact sets. Rejects empty sets.
double hausdorff_point_sets(const std::vector<ValueVec>& a, const std::vector<ValueVec>& b);

/// True iff lower - tol <= v <= upper + tol componentwise.
bool interval_contains(const IntervalVector& x, const ValueVec& v, double tol);

/// Inf-norm distance from a point to the box: the largest one-sided excess
///   max_s max( lower_s - v_s, v_s - upper_s, 0 ).
double interval_excess(const IntervalVector& x, const ValueVec& v);

/// [lower - eps, upper + eps]; eps must be >= 0.
IntervalVector inflate(const IntervalVector& x, double eps);

}  // namespace setvi
