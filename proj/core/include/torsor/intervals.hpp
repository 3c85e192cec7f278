#pragma once

#include <vector>

#include "torsor/integers.hpp"

namespace torsor {

// Closed interval [lo, hi]; empty if lo > hi.
struct RealInterval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty() const { return lo > hi; }
    double length() const { return empty() ? 0.0 : hi - lo; }
};

// Solution set of |A t^2 + C t| <= D for real t (A != 0, D >= 0):
// one interval around the vertex, or two intervals around the roots 0 and -C/A
// when the parabola dips below -D between them. Intervals are disjoint and sorted.
std::vector<RealInterval> solve_abs_quadratic(double A, double C, double D);

// Intersection of a sorted disjoint interval list with [lo, hi].
std::vector<RealInterval> clip_intervals(const std::vector<RealInterval>& xs, double lo, double hi);

double total_length(const std::vector<RealInterval>& xs);

// Contiguous integer range inside a true interval approximated by `approx`,
// decided by the exact predicate `contains` (the true set of integers
// satisfying the predicate inside the interval must be contiguous).
// Returns {lo, hi} with lo > hi when no integer lies in the interval.
template <class Pred>
std::pair<i64, i64> exact_int_range(const RealInterval& approx, Pred&& contains) {
    if (approx.empty()) return {1, 0};
    i64 lo = static_cast<i64>(std::floor(approx.lo)) - 2;
    i64 hi = static_cast<i64>(std::ceil(approx.hi)) + 2;
    while (hi >= lo && !contains(hi)) --hi;
    while (lo <= hi && !contains(lo)) ++lo;
    return {lo, hi};
}

// #{ n in [lo, hi] : n == r (mod m) }, m >= 1.
inline i64 count_ap_in_range(i64 lo, i64 hi, i64 r, i64 m) {
    if (lo > hi) return 0;
    auto fdiv = [](i64 a, i64 b) {  // floor division
        i64 q = a / b, rem = a % b;
        return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
    };
    return fdiv(hi - r, m) - fdiv(lo - 1 - r, m);
}

}  // namespace torsor
