#include "torsor/intervals.hpp"

#include <algorithm>
#include <cmath>

namespace torsor {

std::vector<RealInterval> solve_abs_quadratic(double A, double C, double D) {
    // |A t^2 + C t| <= D.  Complete the square: with u = t + C/(2A),
    // |u^2 - (C/(2A))^2| <= D/|A|, i.e.  V - d <= u^2 <= V + d,
    // V = (C/(2A))^2, d = D/|A|.
    if (D < 0) return {};
    double shift = -C / (2.0 * A);
    double V = shift * shift;
    double d = D / std::abs(A);
    double hi = std::sqrt(V + d);
    if (V <= d) {
        return {{shift - hi, shift + hi}};
    }
    double lo = std::sqrt(V - d);
    return {{shift - hi, shift - lo}, {shift + lo, shift + hi}};
}

std::vector<RealInterval> clip_intervals(const std::vector<RealInterval>& xs, double lo,
                                         double hi) {
    std::vector<RealInterval> out;
    for (const auto& x : xs) {
        RealInterval c{std::max(x.lo, lo), std::min(x.hi, hi)};
        if (!c.empty()) out.push_back(c);
    }
    return out;
}

double total_length(const std::vector<RealInterval>& xs) {
    double s = 0;
    for (const auto& x : xs) s += x.length();
    return s;
}

}  // namespace torsor
