#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "torsor/intervals.hpp"
#include "torsor/rational.hpp"

namespace torsor {

// One counting problem of the special form: a single torsor equation
//   alpha0^{a0} alpha1^{a1}..alpha_r^{a_r}
//     + beta0^{b0} beta1^{b1}..beta_s^{b_s}
//     + gamma0 gamma1^{c1}..gamma_t^{c_t} = 0
// with gamma0 linear, delta absent, height conditions written in beta0 alone,
// and coprimality encoded by the extended Dynkin diagram
//   A0 - A_r - ... - A_1 - D,  B0 - B_s - ... - B_1 - D,  C0 - C_t - ... - C_1 - D,
//   A0 - B0, A0 - C0, B0 - C0   (chain from X0 collapses to X0 - D when empty).

struct SpecialFormTuple {
    i64 alpha0 = 1;
    std::vector<i64> alpha, beta, gamma;  // sizes r, s, t
    i64 delta = 1;
};

// {t in R : h <= 1} for fixed (alpha0, a, b, c, delta; B): approximate
// interval endpoints plus an exact integer membership predicate per piece.
// The pieces partition the integers of the region, so exact per-piece counts
// can be summed without deduplication.
struct HeightRegion {
    std::vector<RealInterval> intervals;      // disjoint, sorted
    std::function<bool(int, i64)> contains;   // exact membership of beta0 = n in piece j
};

struct SpecialFormInstance {
    int r = 0, s = 0, t = 0;
    int a0 = 1;
    std::vector<int> a;  // a1..ar
    int b0 = 1;
    std::vector<int> b;  // b1..bs
    std::vector<int> c;  // c1..ct
    bool alpha0_nonzero = true;  // Z_* selector for alpha0
    std::function<HeightRegion(const SpecialFormTuple&, i64 B)> height_region;
};

struct PiProducts {
    i64 pi_a = 1, pi_delta_a = 1;
    i64 pi_b = 1, pi_delta_b = 1;
    i64 pi_c = 1, pi_delta_c = 1;

    static PiProducts of(const SpecialFormInstance& inst, const SpecialFormTuple& tup);
};

// Value of the torsor equation at (tuple, beta0, gamma0).
i128 torsor_equation_value(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 beta0,
                           i64 gamma0);

// (full graph coprimality verdict, reduced-conditions verdict). The tuple
// with (beta0, gamma0) must satisfy the torsor equation, else throws.
std::pair<bool, bool> coprimality_reduced_equiv(const SpecialFormInstance& inst,
                                                const SpecialFormTuple& tup, i64 beta0, i64 gamma0);

// Conditions (2.3) and (2.6) alone (the ones fixed before the first summation).
bool tuple_admissible(const SpecialFormInstance& inst, const SpecialFormTuple& tup);

// #{1 <= rho <= kc*pi_gamma : gcd(rho, kc*pi_gamma) = 1,
//   A1 == -rho^{b0} * B1 (mod kc*pi_gamma)}.
// Throws if A1 or B1 shares a factor with the modulus.
i64 count_rho(i64 kc, i64 pi_gamma, i64 A1, i64 B1, int b0);

// The density of Proposition-1 shape, exactly in rational arithmetic.
// Requires tuple_admissible.
Rational theta1_prop(const SpecialFormInstance& inst, const SpecialFormTuple& tup);

// Number of (beta0, gamma0) subject to the torsor equation, the reduced
// coprimality conditions on beta0/gamma0, and the height condition.
i64 N1_direct(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B);

// The same count through the double Moebius inversion and exact counts of
// integers in residue classes over the height intervals.
i64 N1_moebius(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B);

// Interval measure of the height region divided by pi_gamma.
double V1(const SpecialFormInstance& inst, const SpecialFormTuple& tup, i64 B);

// The quartic surface as a special-form instance (Table-3 dictionary):
// (alpha0; alpha) = (eta7; eta4, eta6, eta5), (beta0; beta) = (eta8; eta2),
// (gamma0; gamma) = (eta9; eta1), delta = eta3.
SpecialFormInstance quartic_instance();
SpecialFormTuple quartic_tuple(const std::array<i64, 7>& eta17);

}  // namespace torsor
