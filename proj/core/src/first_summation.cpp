#include "torsor/first_summation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "torsor/primes.hpp"
#include "torsor/torsor.hpp"

namespace torsor {

namespace {

i64 ipow64(i64 base, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

i128 ipow128(i64 base, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Vertex ids of the generic diagram: A0, A1..Ar, B0, B1..Bs, C0, C1..Ct, D.
struct Vertex {
    enum Kind { A, Bv, C, D } kind;
    int idx;  // 0 for the free coordinate, 1..r/s/t otherwise; unused for D
};

std::vector<Vertex> all_vertices(const SpecialFormInstance& inst) {
    std::vector<Vertex> vs;
    vs.push_back({Vertex::A, 0});
    for (int i = 1; i <= inst.r; ++i) vs.push_back({Vertex::A, i});
    vs.push_back({Vertex::Bv, 0});
    for (int i = 1; i <= inst.s; ++i) vs.push_back({Vertex::Bv, i});
    vs.push_back({Vertex::C, 0});
    for (int i = 1; i <= inst.t; ++i) vs.push_back({Vertex::C, i});
    vs.push_back({Vertex::D, 0});
    return vs;
}

i64 vertex_value(const SpecialFormTuple& tup, i64 beta0, i64 gamma0, const Vertex& v) {
    switch (v.kind) {
        case Vertex::A:
            return v.idx == 0 ? tup.alpha0 : tup.alpha[v.idx - 1];
        case Vertex::Bv:
            return v.idx == 0 ? beta0 : tup.beta[v.idx - 1];
        case Vertex::C:
            return v.idx == 0 ? gamma0 : tup.gamma[v.idx - 1];
        case Vertex::D:
            return tup.delta;
    }
    return 0;
}

// Adjacency in the generic extended Dynkin diagram. A chain of length zero
// collapses to a direct edge X0 - D.
bool generic_adjacent(const SpecialFormInstance& inst, const Vertex& u, const Vertex& w) {
    auto chain_len = [&](Vertex::Kind k) {
        return k == Vertex::A ? inst.r : (k == Vertex::Bv ? inst.s : inst.t);
    };
    auto ordered = [&](const Vertex& x, const Vertex& y) {
        // free coordinates pairwise adjacent
        if (x.kind != Vertex::D && y.kind != Vertex::D && x.idx == 0 && y.idx == 0) return true;
        // X0 - X_n (n = chain length; X0 - D when the chain is empty)
        if (x.kind != Vertex::D && x.idx == 0) {
            int n = chain_len(x.kind);
            if (n == 0) return y.kind == Vertex::D;
            return y.kind == x.kind && y.idx == n;
        }
        // X_{i+1} - X_i inside a chain
        if (x.kind != Vertex::D && y.kind == x.kind && x.idx > 0 && y.idx > 0)
            return std::abs(x.idx - y.idx) == 1;
        // X_1 - D
        if (x.kind != Vertex::D && x.idx == 1 && y.kind == Vertex::D) return true;
        return false;
    };
    return ordered(u, w) || ordered(w, u);
}

bool full_coprimality(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 beta0,
                      i64 gamma0) {
    auto vs = all_vertices(inst);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!generic_adjacent(inst, vs[i], vs[j]) &&
                gcd64(vertex_value(tup, beta0, gamma0, vs[i]),
                      vertex_value(tup, beta0, gamma0, vs[j])) != 1)
                return false;
    // Triples of pairwise connected symbols besides (A0,B0,C0): D with two of
    // the free coordinates, possible when at least two chains are empty. Each
    // prime dividing delta may then divide at most one of alpha0, beta0, gamma0.
    int empty_chains = (inst.r == 0) + (inst.s == 0) + (inst.t == 0);
    if (empty_chains >= 2) {
        for (i64 p : prime_divisors(tup.delta)) {
            int hits = (mod_norm(tup.alpha0, p) == 0) + (mod_norm(beta0, p) == 0) +
                       (mod_norm(gamma0, p) == 0);
            if (hits > 1) return false;
        }
    }
    return true;
}

// Coprimality among alpha, beta, gamma, delta as in the diagram (condition 2.6).
bool coprimality_26(const SpecialFormInstance& inst, const SpecialFormTuple& tup) {
    auto vs = all_vertices(inst);
    std::erase_if(vs, [](const Vertex& v) { return v.kind != Vertex::D && v.idx == 0; });
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!generic_adjacent(inst, vs[i], vs[j]) &&
                gcd64(vertex_value(tup, 0, 0, vs[i]), vertex_value(tup, 0, 0, vs[j])) != 1)
                return false;
    return true;
}

}  // namespace

PiProducts PiProducts::of(const SpecialFormInstance& inst, const SpecialFormTuple& tup) {
    PiProducts pi;
    for (int i = 0; i < inst.r; ++i) pi.pi_a *= ipow64(tup.alpha[i], inst.a[i]);
    for (int i = 0; i < inst.s; ++i) pi.pi_b *= ipow64(tup.beta[i], inst.b[i]);
    for (int i = 0; i < inst.t; ++i) pi.pi_c *= ipow64(tup.gamma[i], inst.c[i]);
    pi.pi_delta_a = inst.r >= 1 ? tup.delta : 1;
    for (int i = 0; i + 1 < inst.r; ++i) pi.pi_delta_a *= tup.alpha[i];
    pi.pi_delta_b = inst.s >= 1 ? tup.delta : 1;
    for (int i = 0; i + 1 < inst.s; ++i) pi.pi_delta_b *= tup.beta[i];
    pi.pi_delta_c = inst.t >= 1 ? tup.delta : 1;
    for (int i = 0; i + 1 < inst.t; ++i) pi.pi_delta_c *= tup.gamma[i];
    return pi;
}

i128 torsor_equation_value(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 beta0,
                           i64 gamma0) {
    auto pi = PiProducts::of(inst, tup);
    return ipow128(tup.alpha0, inst.a0) * pi.pi_a + ipow128(beta0, inst.b0) * pi.pi_b +
           (i128)gamma0 * pi.pi_c;
}

std::pair<bool, bool> coprimality_reduced_equiv(const SpecialFormInstance& inst,
                                                const SpecialFormTuple& tup, i64 beta0,
                                                i64 gamma0) {
    if (torsor_equation_value(inst, tup, beta0, gamma0) != 0)
        throw std::invalid_argument("coprimality_reduced_equiv: torsor equation violated");
    auto pi = PiProducts::of(inst, tup);
    bool reduced = gcd64(tup.alpha0, pi.pi_delta_a) == 1 && gcd64(tup.alpha0, pi.pi_b) == 1 &&
                   gcd64(tup.alpha0, pi.pi_c) == 1 &&                              // (2.3)
                   gcd64(beta0, pi.pi_delta_b) == 1 && gcd64(beta0, pi.pi_a) == 1 &&  // (2.4)
                   gcd64(gamma0, pi.pi_delta_c) == 1 &&                            // (2.5)
                   coprimality_26(inst, tup);                                      // (2.6)
    return {full_coprimality(inst, tup, beta0, gamma0), reduced};
}

bool tuple_admissible(const SpecialFormInstance& inst, const SpecialFormTuple& tup) {
    auto pi = PiProducts::of(inst, tup);
    if (inst.alpha0_nonzero && tup.alpha0 == 0) return false;
    return gcd64(tup.alpha0, pi.pi_delta_a) == 1 && gcd64(tup.alpha0, pi.pi_b) == 1 &&
           gcd64(tup.alpha0, pi.pi_c) == 1 && coprimality_26(inst, tup);
}

i64 count_rho(i64 kc, i64 pi_gamma, i64 A1, i64 B1, int b0) {
    i64 M = kc * pi_gamma;
    if (M < 1) throw std::invalid_argument("count_rho: modulus must be positive");
    if (gcd64(A1, M) != 1 || gcd64(B1, M) != 1)
        throw std::invalid_argument("count_rho: A1, B1 must be coprime to the modulus");
    i64 a = mod_norm(A1, M), b = mod_norm(B1, M);
    i64 cnt = 0;
    for (i64 rho = 1; rho <= M; ++rho) {
        if (gcd64(rho, M) != 1) continue;
        if (mod_norm(a + mulmod(powmod(rho, b0, M), b, M), M) == 0) ++cnt;
    }
    return cnt;
}

Rational theta1_prop(const SpecialFormInstance& inst, const SpecialFormTuple& tup) {
    if (!tuple_admissible(inst, tup))
        throw std::invalid_argument("theta1_prop: tuple violates (2.3)/(2.6)");
    auto pi = PiProducts::of(inst, tup);
    const i64 n = pi.pi_delta_b * pi.pi_a;
    const Rational phis_n = phi_star(n);
    Rational total = 0;
    for (auto [kc, mu] : squarefree_divisors(pi.pi_delta_c)) {
        if (gcd64(kc, abs64(tup.alpha0)) != 1 || gcd64(kc, pi.pi_a) != 1 ||
            gcd64(kc, pi.pi_b) != 1)
            continue;
        i64 M = kc * pi.pi_c;
        i64 A1 = mod_norm128(ipow128(tup.alpha0, inst.a0) * pi.pi_a, M);
        i64 B1 = mod_norm(pi.pi_b, M);
        i64 rho_count = count_rho(kc, pi.pi_c, A1, B1, inst.b0);
        total += Rational(mu) * phis_n / (Rational(kc) * phi_star(gcd64(n, M))) * rho_count;
    }
    return total;
}

i64 N1_direct(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B) {
    auto pi = PiProducts::of(inst, tup);
    HeightRegion region = inst.height_region(tup, B);
    i128 a_term = ipow128(tup.alpha0, inst.a0) * pi.pi_a;
    i64 cnt = 0;
    for (int j = 0; j < static_cast<int>(region.intervals.size()); ++j) {
        auto [lo, hi] =
            exact_int_range(region.intervals[j], [&](i64 n) { return region.contains(j, n); });
        for (i64 n = lo; n <= hi; ++n) {
            i128 val = a_term + ipow128(n, inst.b0) * pi.pi_b;
            if (val % pi.pi_c != 0) continue;
            i64 gamma0 = static_cast<i64>(-(val / pi.pi_c));
            if (gcd64(n, pi.pi_delta_b) != 1 || gcd64(n, pi.pi_a) != 1) continue;  // (2.4)
            if (gcd64(gamma0, pi.pi_delta_c) != 1) continue;                       // (2.5)
            ++cnt;
        }
    }
    return cnt;
}

i64 N1_moebius(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B) {
    auto pi = PiProducts::of(inst, tup);
    HeightRegion region = inst.height_region(tup, B);
    if (region.intervals.empty()) return 0;
    const i64 n_kb = pi.pi_delta_b * pi.pi_a;
    i64 total = 0;
    for (auto [kc, mu_c] : squarefree_divisors(pi.pi_delta_c)) {
        if (gcd64(kc, abs64(tup.alpha0)) != 1 || gcd64(kc, pi.pi_a) != 1 ||
            gcd64(kc, pi.pi_b) != 1)
            continue;
        const i64 M = kc * pi.pi_c;
        const i64 A1 = mod_norm128(ipow128(tup.alpha0, inst.a0) * pi.pi_a, M);
        const i64 B1 = mod_norm(pi.pi_b, M);
        assert(M == 1 || (gcd64(A1, M) == 1 && gcd64(B1, M) == 1));
        for (i64 rho = 1; rho <= M; ++rho) {
            if (gcd64(rho, M) != 1) continue;
            if (mod_norm(A1 + mulmod(powmod(rho, inst.b0, M), B1, M), M) != 0) continue;
            for (auto [kb, mu_b] : squarefree_divisors(n_kb)) {
                if (gcd64(kb, M) != 1) continue;
                // beta0 = kb * m with m == rho * kb^{-1} (mod M), beta0 in the region
                i64 rm = (M == 1) ? 0 : mulmod(rho, modinv(kb, M), M);
                i64 pieces = 0;
                for (int j = 0; j < static_cast<int>(region.intervals.size()); ++j) {
                    RealInterval scaled{region.intervals[j].lo / kb, region.intervals[j].hi / kb};
                    auto [mlo, mhi] = exact_int_range(
                        scaled, [&](i64 m) { return region.contains(j, kb * m); });
                    pieces += count_ap_in_range(mlo, mhi, rm, M);
                }
                total += static_cast<i64>(mu_c) * mu_b * pieces;
            }
        }
    }
    return total;
}

double V1(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B) {
    auto pi = PiProducts::of(inst, tup);
    HeightRegion region = inst.height_region(tup, B);
    return total_length(region.intervals) / static_cast<double>(pi.pi_c);
}

SpecialFormInstance quartic_instance() {
    SpecialFormInstance inst;
    inst.r = 3;
    inst.s = 1;
    inst.t = 1;
    inst.a0 = 1;
    inst.a = {1, 2, 3};  // alpha = (eta4, eta6, eta5)
    inst.b0 = 1;
    inst.b = {1};  // beta = (eta2)
    inst.c = {1};  // gamma = (eta1)
    inst.alpha0_nonzero = true;
    inst.height_region = [](const SpecialFormTuple& tup, i64 B) {
        const std::array<i64, 7> eta{tup.gamma[0], tup.beta[0],  tup.delta, tup.alpha[0],
                                     tup.alpha[2], tup.alpha[1], tup.alpha0};
        const i64 e1 = eta[0], e2 = eta[1], e3 = eta[2], e4 = eta[3], e5 = eta[4], e6 = eta[5],
                  e7 = eta[6];
        HeightRegion region;
        i128 v1 = (i128)e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4 * e6;
        i128 v2 = (i128)e1 * e2 * e3 * e3 * e4 * e4 * e5 * e5 * e6 * e6 * e7;
        i128 v3 = (i128)e3 * e4 * e4 * e5 * e5 * e5 * e5 * e6 * e6 * e6 * e7 * e7;
        if (v1 > B || (v2 < 0 ? -v2 : v2) > B || v3 > B) {
            region.contains = [](int, i64) { return false; };
            return region;
        }
        const double A = static_cast<double>(e2) * e7;
        const double C =
            static_cast<double>(e4) * e5 * e5 * e5 * e6 * e6 * e7 * e7;
        const double L0 = static_cast<double>(B) / (static_cast<double>(e2) * e3 * e4 * e5 * e6 *
                                                    std::abs(static_cast<double>(e7)));
        auto quad = solve_abs_quadratic(A, C, static_cast<double>(e1) * B);
        // Split the quadratic set at the vertex of A t^2 + C t (t = -C/(2A)):
        // each side then meets the region in one interval whether the true
        // set has one component or two, so per-piece integer sets stay
        // contiguous even when the float solver misjudges the component
        // count. Sides are decided in exact integer arithmetic.
        const double vertex = -C / (2.0 * A);
        std::vector<RealInterval> halves;  // [left, right]
        if (quad.size() == 2) {
            halves = {quad[0], quad[1]};
        } else if (quad.size() == 1) {
            halves = {{quad[0].lo, std::min(quad[0].hi, vertex)},
                      {std::max(quad[0].lo, vertex), quad[0].hi}};
        }
        std::vector<int> side;  // -1 = left of the vertex (inclusive), +1 = right
        for (size_t k = 0; k < halves.size(); ++k) {
            RealInterval clipped{std::max(halves[k].lo, -L0), std::min(halves[k].hi, L0)};
            if (clipped.lo > clipped.hi + 1.0) continue;  // empty beyond float slack
            clipped.hi = std::max(clipped.hi, clipped.lo);
            region.intervals.push_back(clipped);
            side.push_back(k == 0 ? -1 : +1);
        }
        const i128 A2 = (i128)2 * e2 * e7;
        const i128 Ci = (i128)e4 * e5 * e5 * e5 * e6 * e6 * e7 * e7;
        region.contains = [eta, B, A2, Ci, side](int piece, i64 n) {
            if (!eta8_in_region(eta, n, B)) return false;
            i128 lhs = A2 * n + Ci;  // sign of (n - vertex) times sign(A)
            bool left = (A2 > 0) ? (lhs <= 0) : (lhs >= 0);
            return side[piece] == -1 ? left : !left;
        };
        return region;
    };
    return inst;
}

SpecialFormTuple quartic_tuple(const std::array<i64, 7>& eta17) {
    SpecialFormTuple tup;
    tup.alpha0 = eta17[6];
    tup.alpha = {eta17[3], eta17[5], eta17[4]};
    tup.beta = {eta17[1]};
    tup.gamma = {eta17[0]};
    tup.delta = eta17[2];
    return tup;
}

}  // namespace torsor
