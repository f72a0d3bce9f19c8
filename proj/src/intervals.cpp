#include "setvi/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace setvi {

namespace {

void check_bounds(double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        std::ostringstream msg;
        msg << what << ": bounds must be finite";
        throw std::invalid_argument(msg.str());
    }
    if (lo > hi) {
        std::ostringstream msg;
        msg << what << ": lower bound " << lo << " exceeds upper bound " << hi;
        throw std::invalid_argument(msg.str());
    }
}

void check_same_size(const IntervalVector& x, const IntervalVector& y, const char* what) {
    if (x.size() != y.size()) {
        std::ostringstream msg;
        msg << what << ": interval vectors have lengths " << x.size() << " and "
            << y.size();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    check_bounds(lo, hi, "Interval");
}

Interval interval_add(Interval x, Interval y) { return {x.lo + y.lo, x.hi + y.hi}; }

Interval interval_scale(double alpha, Interval x) {
    if (alpha < 0.0) {
        throw std::invalid_argument("interval_scale: alpha must be >= 0");
    }
    return {alpha * x.lo, alpha * x.hi};
}

Interval interval_sub(Interval x, Interval y) {
    const double lo = x.lo - y.lo;
    const double hi = x.hi - y.hi;
    if (lo > hi) {
        // The endpoint rule can invert bounds when y is wider than x.
        std::ostringstream msg;
        msg << "interval_sub: endpoint rule produced reversed bounds [" << lo << ", "
            << hi << "]";
        throw std::invalid_argument(msg.str());
    }
    return {lo, hi};
}

Interval interval_min(Interval x, Interval y) {
    return {std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
}

IntervalVector::IntervalVector(ValueVec lower_, ValueVec upper_)
    : lower(std::move(lower_)), upper(std::move(upper_)) {
    if (lower.size() != upper.size()) {
        std::ostringstream msg;
        msg << "IntervalVector: bound lengths differ (" << lower.size() << " vs "
            << upper.size() << ")";
        throw std::invalid_argument(msg.str());
    }
    for (Eigen::Index i = 0; i < lower.size(); ++i) {
        check_bounds(lower(i), upper(i), "IntervalVector");
    }
}

IntervalCost::IntervalCost(Matrix lower_, Matrix upper_)
    : lower(std::move(lower_)), upper(std::move(upper_)) {
    if (lower.rows() != upper.rows() || lower.cols() != upper.cols()) {
        std::ostringstream msg;
        msg << "IntervalCost: bound shapes differ (" << lower.rows() << "x" << lower.cols()
            << " vs " << upper.rows() << "x" << upper.cols() << ")";
        throw std::invalid_argument(msg.str());
    }
    for (Eigen::Index r = 0; r < lower.rows(); ++r) {
        for (Eigen::Index c = 0; c < lower.cols(); ++c) {
            check_bounds(lower(r, c), upper(r, c), "IntervalCost");
        }
    }
}

double hausdorff_interval(const IntervalVector& x, const IntervalVector& y) {
    check_same_size(x, y, "hausdorff_interval");
    const double lower_gap = (x.lower - y.lower).lpNorm<Eigen::Infinity>();
    const double upper_gap = (x.upper - y.upper).lpNorm<Eigen::Infinity>();
    return std::max(lower_gap, upper_gap);
}

double hausdorff_point_sets(const std::vector<ValueVec>& a, const std::vector<ValueVec>& b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("hausdorff_point_sets: sets must be non-empty");
    }
    const Eigen::Index dim = a.front().size();
    for (const auto& v : a) {
        if (v.size() != dim)
            throw std::invalid_argument("hausdorff_point_sets: mixed dimensions");
    }
    for (const auto& v : b) {
        if (v.size() != dim)
            throw std::invalid_argument("hausdorff_point_sets: mixed dimensions");
    }

    auto directed = [](const std::vector<ValueVec>& from, const std::vector<ValueVec>& to) {
        double worst = 0.0;
        for (const auto& x : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto& y : to) {
                nearest = std::min(nearest, (x - y).lpNorm<Eigen::Infinity>());
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

bool interval_contains(const IntervalVector& x, const ValueVec& v, double tol) {
    if (v.size() != x.size()) {
        throw std::invalid_argument("interval_contains: length mismatch");
    }
    if (tol < 0.0) throw std::invalid_argument("interval_contains: tol must be >= 0");
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) < x.lower(i) - tol || v(i) > x.upper(i) + tol) return false;
    }
    return true;
}

double interval_excess(const IntervalVector& x, const ValueVec& v) {
    if (v.size() != x.size()) {
        throw std::invalid_argument("interval_excess: length mismatch");
    }
    double excess = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        excess = std::max({excess, x.lower(i) - v(i), v(i) - x.upper(i)});
    }
    return excess;
}

IntervalVector inflate(const IntervalVector& x, double eps) {
    if (eps < 0.0) throw std::invalid_argument("inflate: eps must be >= 0");
    return {(x.lower.array() - eps).matrix(), (x.upper.array() + eps).matrix()};
}

}  // namespace setvi
