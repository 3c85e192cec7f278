#include "torsor/torsor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "torsor/parallel.hpp"

namespace torsor {

namespace {

constexpr uint16_t kEdgeBits[10] = {
    0,
    /*1*/ (1u << 9) | (1u << 3),
    /*2*/ (1u << 8) | (1u << 3),
    /*3*/ (1u << 4) | (1u << 1) | (1u << 2),
    /*4*/ (1u << 6) | (1u << 3),
    /*5*/ (1u << 7) | (1u << 6),
    /*6*/ (1u << 5) | (1u << 4),
    /*7*/ (1u << 9) | (1u << 8) | (1u << 5),
    /*8*/ (1u << 9) | (1u << 7) | (1u << 2),
    /*9*/ (1u << 7) | (1u << 8) | (1u << 1),
};

// Monomials of the psi map as 128-bit products.
i128 psi0(const TorsorPoint& p) {
    return (i128)p.e(2) * p.e(3) * p.e(4) * p.e(5) * p.e(6) * p.e(7) * p.e(8);
}
i128 psi1(const TorsorPoint& p) {
    return (i128)p.e(1) * p.e(1) * p.e(2) * p.e(2) * p.e(3) * p.e(3) * p.e(3) * p.e(4) * p.e(4) *
           p.e(6);
}
i128 psi2(const TorsorPoint& p) {
    return (i128)p.e(1) * p.e(2) * p.e(3) * p.e(3) * p.e(4) * p.e(4) * p.e(5) * p.e(5) * p.e(6) *
           p.e(6) * p.e(7);
}
i128 psi3(const TorsorPoint& p) {
    return (i128)p.e(3) * p.e(4) * p.e(4) * p.e(5) * p.e(5) * p.e(5) * p.e(5) * p.e(6) * p.e(6) *
           p.e(6) * p.e(7) * p.e(7);
}
i128 psi4(const TorsorPoint& p) { return (i128)p.e(7) * p.e(8) * p.e(9); }

i128 iabs128(i128 x) { return x < 0 ? -x : x; }

struct OuterTask {
    i64 e3, e5;
};

}  // namespace

bool graph_adjacent(int i, int j) {
    assert(1 <= i && i <= 9 && 1 <= j && j <= 9 && i != j);
    return (kEdgeBits[i] >> j) & 1u;
}

bool torsor_equation_holds(const TorsorPoint& p) {
    i128 t = (i128)p.e(1) * p.e(9) + (i128)p.e(2) * p.e(8) +
             (i128)p.e(4) * p.e(5) * p.e(5) * p.e(5) * p.e(6) * p.e(6) * p.e(7);
    return t == 0;
}

std::optional<i64> solve_eta9(const std::array<i64, 8>& eta) {
    if (eta[0] < 1) throw std::invalid_argument("solve_eta9: eta1 must be >= 1");
    i128 num = (i128)eta[1] * eta[7] +
               (i128)eta[3] * eta[4] * eta[4] * eta[4] * eta[5] * eta[5] * eta[6];
    if (num % eta[0] != 0) return std::nullopt;
    return static_cast<i64>(-(num / eta[0]));
}

bool coprimality_ok(const TorsorPoint& p) {
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            if (!graph_adjacent(i, j) && gcd64(p.e(i), p.e(j)) != 1) return false;
    return true;
}

Coords5 psi_map(const TorsorPoint& p) {
    if (!torsor_equation_holds(p)) throw std::invalid_argument("psi_map: torsor equation violated");
    return {static_cast<i64>(psi0(p)), static_cast<i64>(psi1(p)), static_cast<i64>(psi2(p)),
            static_cast<i64>(psi3(p)), static_cast<i64>(psi4(p))};
}

std::vector<RealInterval> eta8_intervals(const std::array<i64, 7>& eta, i64 B) {
    const i64 e1 = eta[0], e2 = eta[1], e3 = eta[2], e4 = eta[3], e5 = eta[4], e6 = eta[5],
              e7 = eta[6];
    // Psi1, Psi2, Psi3 do not involve eta8: empty region if any exceeds B.
    i128 v1 = (i128)e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4 * e6;
    i128 v2 = (i128)e1 * e2 * e3 * e3 * e4 * e4 * e5 * e5 * e6 * e6 * e7;
    i128 v3 = (i128)e3 * e4 * e4 * e5 * e5 * e5 * e5 * e6 * e6 * e6 * e7 * e7;
    if (v1 > B || iabs128(v2) > B || v3 > B) return {};
    // |Psi0| <= B: symmetric interval |t| <= B / (e2 e3 e4 e5 e6 |e7|).
    double L0 = static_cast<double>(B) /
                (static_cast<double>(e2) * e3 * e4 * e5 * e6 * std::abs(static_cast<double>(e7)));
    // |Psi4| <= B with eta9 eliminated: |e2 e7 t^2 + e4 e5^3 e6^2 e7^2 t| <= e1 B.
    double A = static_cast<double>(e2) * e7;
    double C = static_cast<double>(e4) * e5 * e5 * e5 * e6 * e6 * e7 * e7;
    double D = static_cast<double>(e1) * B;
    return clip_intervals(solve_abs_quadratic(A, C, D), -L0, L0);
}

bool eta8_in_region(const std::array<i64, 7>& eta, i64 eta8, i64 B) {
    const i64 e1 = eta[0], e2 = eta[1], e3 = eta[2], e4 = eta[3], e5 = eta[4], e6 = eta[5],
              e7 = eta[6];
    i128 v1 = (i128)e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4 * e6;
    i128 v2 = (i128)e1 * e2 * e3 * e3 * e4 * e4 * e5 * e5 * e6 * e6 * e7;
    i128 v3 = (i128)e3 * e4 * e4 * e5 * e5 * e5 * e5 * e6 * e6 * e6 * e7 * e7;
    if (v1 > B || iabs128(v2) > B || v3 > B) return false;
    i128 v0 = (i128)e2 * e3 * e4 * e5 * e6 * e7 * eta8;
    if (iabs128(v0) > B) return false;
    i128 quad = (i128)e2 * e7 * eta8 * eta8 + (i128)e4 * e5 * e5 * e5 * e6 * e6 * e7 * e7 * eta8;
    return iabs128(quad) <= (i128)e1 * B;
}

namespace {

// Count over eta8 in its residue class mod eta1 and the determined eta9.
i64 count_inner(i64 B, i64 e1, i64 e2, i64 e3, i64 e4, i64 e5, i64 e6, i64 e7) {
    i64 a7 = abs64(e7);
    i64 t_mod = mod_norm128(-(i128)e4 * e5 * e5 * e5 * e6 * e6 * e7, e1);
    i64 r = (e1 == 1) ? 0 : mulmod(t_mod, modinv(e2, e1), e1);
    i64 L8 = B / (e2 * e3 * e4 * e5 * e6 * a7);
    i64 g8 = e3 * e4 * e5 * e6;
    i64 g9 = e2 * g8;
    i128 t = (i128)e4 * e5 * e5 * e5 * e6 * e6 * e7;
    i64 cnt = 0;
    for (i64 e8 = -L8 + mod_norm(r + L8, e1); e8 <= L8; e8 += e1) {
        i128 num = (i128)e2 * e8 + t;
        assert(num % e1 == 0);
        i64 e9 = static_cast<i64>(-(num / e1));
        if (iabs128((i128)e7 * e8 * e9) > B) continue;
        if (gcd64(e8, g8) != 1) continue;
        if (gcd64(e9, g9) != 1) continue;
        ++cnt;
    }
    return cnt;
}

template <class Fn7>
void enumerate_eta17(i64 B, i64 e3, i64 e5, Fn7&& fn) {
    if (gcd64(e3, e5) != 1) return;
    i64 max4 = isqrt(std::min(B / (e3 * e3 * e3), B / (e3 * e5 * e5 * e5 * e5)));
    for (i64 e4 = 1; e4 <= max4; ++e4) {
        if (gcd64(e4, e5) != 1) continue;
        for (i64 e2 = 1; (i128)e2 * e2 * e3 * e3 * e3 * e4 * e4 <= B; ++e2) {
            if (gcd64(e2, e4) != 1 || gcd64(e2, e5) != 1) continue;
            for (i64 e1 = 1; (i128)e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4 <= B; ++e1) {
                if (gcd64(e1, e2) != 1 || gcd64(e1, e4) != 1 || gcd64(e1, e5) != 1) continue;
                i64 base1 = e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4;
                i64 base3 = e3 * e4 * e4 * e5 * e5 * e5 * e5;
                i64 base2 = e1 * e2 * e3 * e3 * e4 * e4 * e5 * e5;
                for (i64 e6 = 1; e6 <= B / base1; ++e6) {
                    if ((i128)e6 * e6 * e6 * base3 > B || (i128)e6 * e6 * base2 > B) break;
                    if (gcd64(e6, e1) != 1 || gcd64(e6, e2) != 1 || gcd64(e6, e3) != 1) continue;
                    i64 lim7 = std::min(isqrt(B / (base3 * e6 * e6 * e6)),
                                        B / (base2 * e6 * e6));
                    for (i64 a7 = 1; a7 <= lim7; ++a7) {
                        if (gcd64(a7, e1) != 1 || gcd64(a7, e2) != 1 || gcd64(a7, e3) != 1 ||
                            gcd64(a7, e4) != 1 || gcd64(a7, e6) != 1)
                            continue;
                        fn(e1, e2, e4, e6, a7);
                    }
                }
            }
        }
    }
}

}  // namespace

i64 count_torsor(i64 B, int workers) {
    if (B < 1) throw std::invalid_argument("count_torsor: B must be >= 1");
    std::vector<OuterTask> tasks;
    for (i64 e3 = 1; (i128)e3 * e3 * e3 <= B; ++e3)
        for (i64 e5 = 1; (i128)e3 * e5 * e5 * e5 * e5 <= B; ++e5) tasks.push_back({e3, e5});
    return parallel_sum_tasks(tasks, workers, [B](const OuterTask& task) {
        i64 cnt = 0;
        enumerate_eta17(B, task.e3, task.e5, [&](i64 e1, i64 e2, i64 e4, i64 e6, i64 a7) {
            cnt += count_inner(B, e1, e2, task.e3, e4, task.e5, e6, a7);
            cnt += count_inner(B, e1, e2, task.e3, e4, task.e5, e6, -a7);
        });
        return cnt;
    });
}

void for_each_torsor_point(i64 B, const std::function<void(const TorsorPoint&)>& fn) {
    if (B < 1) throw std::invalid_argument("for_each_torsor_point: B must be >= 1");
    for (i64 e3 = 1; (i128)e3 * e3 * e3 <= B; ++e3) {
        for (i64 e5 = 1; (i128)e3 * e5 * e5 * e5 * e5 <= B; ++e5) {
            enumerate_eta17(B, e3, e5, [&](i64 e1, i64 e2, i64 e4, i64 e6, i64 a7) {
                for (i64 e7 : {a7, -a7}) {
                    i64 t_mod = mod_norm128(-(i128)e4 * e5 * e5 * e5 * e6 * e6 * e7, e1);
                    i64 r = (e1 == 1) ? 0 : mulmod(t_mod, modinv(e2, e1), e1);
                    i64 L8 = B / (e2 * e3 * e4 * e5 * e6 * a7);
                    i64 g8 = e3 * e4 * e5 * e6;
                    i64 g9 = e2 * g8;
                    i128 t = (i128)e4 * e5 * e5 * e5 * e6 * e6 * e7;
                    for (i64 e8 = -L8 + mod_norm(r + L8, e1); e8 <= L8; e8 += e1) {
                        i128 num = (i128)e2 * e8 + t;
                        i64 e9 = static_cast<i64>(-(num / e1));
                        if (iabs128((i128)e7 * e8 * e9) > B) continue;
                        if (gcd64(e8, g8) != 1 || gcd64(e9, g9) != 1) continue;
                        fn(TorsorPoint{{e1, e2, e3, e4, e5, e6, e7, e8, e9}});
                    }
                }
            });
        }
    }
}

void for_each_admissible_eta17(i64 B, const std::function<void(const std::array<i64, 7>&)>& fn) {
    if (B < 1) throw std::invalid_argument("for_each_admissible_eta17: B must be >= 1");
    for (i64 e3 = 1; (i128)e3 * e3 * e3 <= B; ++e3) {
        for (i64 e5 = 1; (i128)e3 * e5 * e5 * e5 * e5 <= B; ++e5) {
            enumerate_eta17(B, e3, e5, [&](i64 e1, i64 e2, i64 e4, i64 e6, i64 a7) {
                fn({e1, e2, e3, e4, e5, e6, a7});
                fn({e1, e2, e3, e4, e5, e6, -a7});
            });
        }
    }
}

}  // namespace torsor
