#include "torsor/surface.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "torsor/parallel.hpp"

namespace torsor {

namespace {

i64 gcd5(const Coords5& x) {
    i64 g = 0;
    for (i64 v : x) g = std::gcd(g, abs64(v));
    return g;
}

// Points of U with the given x2, x1*x3 = x2^2 factorization, summed over x0.
i64 count_for_divisor_pair(i64 B, i64 x2, i64 x1, i64 x3) {
    i64 cnt = 0;
    for (i64 x0 = -B; x0 <= B; ++x0) {
        i64 t = x0 * (x0 + x3);  // |t| <= B * 2B, fits i64 for B <= 1e9
        if (t % x2 != 0) continue;
        i64 x4 = -t / x2;
        if (abs64(x4) > B) continue;
        if (gcd5({x0, x1, x2, x3, x4}) != 1) continue;
        ++cnt;
    }
    return cnt;
}

}  // namespace

SurfacePoint SurfacePoint::normalize(const Coords5& x) {
    i64 g = gcd5(x);
    assert(g != 0 && x[2] != 0);
    i64 s = (x[2] > 0) ? g : -g;
    return {x[0] / s, x[1] / s, x[2] / s, x[3] / s, x[4] / s};
}

bool on_surface(const Coords5& x) {
    i128 q1 = (i128)x[0] * x[0] + (i128)x[0] * x[3] + (i128)x[2] * x[4];
    i128 q2 = (i128)x[1] * x[3] - (i128)x[2] * x[2];
    return q1 == 0 && q2 == 0;
}

bool on_line(const Coords5& x) {
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) return true;
    if (x[0] + x[3] == 0 && x[1] == 0 && x[2] == 0) return true;
    if (x[0] == 0 && x[2] == 0 && x[3] == 0) return true;
    return false;
}

i64 height(const Coords5& x) {
    i64 g = gcd5(x);
    if (g == 0) throw std::invalid_argument("height: zero tuple");
    i64 h = 0;
    for (i64 v : x) h = std::max(h, abs64(v) / g);
    return h;
}

i64 count_naive(i64 B, int workers) {
    if (B < 1) throw std::invalid_argument("count_naive: B must be >= 1");
    std::vector<i64> tasks;
    for (i64 x2 = 1; x2 <= B; ++x2) tasks.push_back(x2);
    return parallel_sum_tasks(tasks, workers, [B](i64 x2) {
        i64 cnt = 0;
        i64 n = x2 * x2;
        for (i64 d = 1; d <= std::min(B, n); ++d) {
            if (n % d != 0) continue;
            i64 q = n / d;
            if (q > B) continue;
            cnt += count_for_divisor_pair(B, x2, d, q);
            cnt += count_for_divisor_pair(B, x2, -d, -q);
        }
        return cnt;
    });
}

std::vector<SurfacePoint> naive_points(i64 B) {
    if (B < 1) throw std::invalid_argument("naive_points: B must be >= 1");
    std::vector<SurfacePoint> pts;
    for (i64 x2 = 1; x2 <= B; ++x2) {
        i64 n = x2 * x2;
        for (i64 d = 1; d <= std::min(B, n); ++d) {
            if (n % d != 0) continue;
            i64 q = n / d;
            if (q > B) continue;
            for (auto [x1, x3] : {std::pair<i64, i64>{d, q}, {-d, -q}}) {
                for (i64 x0 = -B; x0 <= B; ++x0) {
                    i64 t = x0 * (x0 + x3);
                    if (t % x2 != 0) continue;
                    i64 x4 = -t / x2;
                    if (abs64(x4) > B) continue;
                    Coords5 x{x0, x1, x2, x3, x4};
                    if (gcd5(x) != 1) continue;
                    assert(on_surface(x) && !on_line(x));
                    pts.push_back(SurfacePoint::normalize(x));
                }
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

i64 count_box_oracle(i64 B) {
    if (B < 1) throw std::invalid_argument("count_box_oracle: B must be >= 1");
    std::vector<SurfacePoint> pts;
    Coords5 x{};
    for (x[0] = -B; x[0] <= B; ++x[0])
        for (x[1] = -B; x[1] <= B; ++x[1])
            for (x[2] = 1; x[2] <= B; ++x[2])  // x2 != 0 on U; normalize x2 > 0
                for (x[3] = -B; x[3] <= B; ++x[3])
                    for (x[4] = -B; x[4] <= B; ++x[4]) {
                        if (!on_surface(x) || on_line(x)) continue;
                        if (gcd5(x) != 1) continue;
                        pts.push_back({x[0], x[1], x[2], x[3], x[4]});
                    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return static_cast<i64>(pts.size());
}

}  // namespace torsor
