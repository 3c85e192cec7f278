#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torsor/qpoly.hpp"
#include "torsor/rational.hpp"

namespace torsor {

// theta(eta1..eta_r) = prod_p theta_p(I_p(eta)), where I_p = {i : p | eta_i}
// and the local factor depends only on that support set. Factors are
// polynomials in q = 1/p, uniform in p, with optional per-prime overrides.
struct LocalFactorSystem {
    int r = 0;
    std::vector<Qpoly> table;  // indexed by subset bitmask, size 2^r
    std::map<i64, std::vector<Rational>> overrides;  // prime -> per-mask values
    std::optional<Rational> theta4_C;  // declared Theta'_{4,r}(C) membership

    const Qpoly& factor(unsigned mask) const { return table[mask]; }
    Rational factor_at(i64 p, unsigned mask) const;
};

// Finite product over p | eta_1...eta_r; requires theta_p(empty) = 1.
Rational eval_exact(const LocalFactorSystem& sys, std::span<const i64> eta);
double eval(const LocalFactorSystem& sys, std::span<const i64> eta);

// Average over the last variable (Cor. of the several-variable machinery):
// theta'_p(I) = (1-q) theta_p(I) + q theta_p(I + {r}), symbolically.
LocalFactorSystem average_last(const LocalFactorSystem& sys);

// Average over an arbitrary variable (0-based index), renumbering the rest.
LocalFactorSystem average_var(const LocalFactorSystem& sys, int var);

struct AverageAllResult {
    Qpoly per_prime;  // theta_{0,p} as a polynomial in q
    double value = 0.0;
    double tail = 0.0;
    i64 prime_limit = 0;
};

// Full average theta_0 = prod_p sum_J (1-q)^{r-#J} q^{#J} theta_p(J), with the
// truncated Euler product. Throws std::domain_error when the per-prime
// polynomial is not 1 + O(q^2).
AverageAllResult average_all(const LocalFactorSystem& sys, i64 prime_limit = 1000000);

struct ClassCheckResult {
    bool ok = true;
    std::string violation;  // first violated inequality, human-readable
};

// Checks the Theta'_{4,r}(C) inequalities as polynomial inequalities on
// q in (0, 1/2]: exact evaluation on a dense rational grid including the
// endpoint, plus the leading-coefficient sign at q -> 0+.
ClassCheckResult verify_class_membership(const LocalFactorSystem& sys, const Rational& C,
                                         int grid = 256);

// The quartic surface's first-summation density as a 7-variable system:
// theta_p = 1 on {}, {1}, {2}, {7}; 1 - 1/p on {4}, {5}, {6}, {1,3}, {2,3},
// {3,4}, {4,6}, {5,6}, {5,7}; 1 - 2/p on {3}; 0 on every other subset.
LocalFactorSystem theta1_qa1a3();

// phi* as a one-variable system (for cross-checks with the one-variable path).
LocalFactorSystem phi_star_system();

}  // namespace torsor
