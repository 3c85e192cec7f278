#include "torsor/local_factors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torsor/primes.hpp"

namespace torsor {

Rational LocalFactorSystem::factor_at(i64 p, unsigned mask) const {
    if (auto it = overrides.find(p); it != overrides.end()) return it->second[mask];
    return table[mask].eval(Rational(1, p));
}

namespace {

// Primes dividing any eta_i, with the support mask of each.
std::vector<std::pair<i64, unsigned>> support_masks(std::span<const i64> eta) {
    std::set<i64> primes;
    for (i64 e : eta) {
        if (e < 1) throw std::invalid_argument("local factor eval: eta_i must be positive");
        for (i64 p : prime_divisors(e)) primes.insert(p);
    }
    std::vector<std::pair<i64, unsigned>> out;
    for (i64 p : primes) {
        unsigned mask = 0;
        for (size_t i = 0; i < eta.size(); ++i)
            if (eta[i] % p == 0) mask |= (1u << i);
        out.emplace_back(p, mask);
    }
    return out;
}

void require_unit_empty_factor(const LocalFactorSystem& sys) {
    if (!(sys.table[0] == Qpoly(1)))
        throw std::domain_error("local factor eval: theta_p(empty) must be 1");
    for (auto& [p, vals] : sys.overrides)
        if (vals[0] != 1)
            throw std::domain_error("local factor eval: theta_p(empty) must be 1");
}

}  // namespace

Rational eval_exact(const LocalFactorSystem& sys, std::span<const i64> eta) {
    if (static_cast<int>(eta.size()) != sys.r)
        throw std::invalid_argument("local factor eval: wrong arity");
    require_unit_empty_factor(sys);
    Rational v = 1;
    for (auto& [p, mask] : support_masks(eta)) {
        v *= sys.factor_at(p, mask);
        if (v == 0) return v;
    }
    return v;
}

double eval(const LocalFactorSystem& sys, std::span<const i64> eta) {
    return to_double(eval_exact(sys, eta));
}

LocalFactorSystem average_last(const LocalFactorSystem& sys) {
    if (sys.r < 1) throw std::invalid_argument("average_last: no variables left");
    return average_var(sys, sys.r - 1);
}

LocalFactorSystem average_var(const LocalFactorSystem& sys, int var) {
    if (var < 0 || var >= sys.r) throw std::invalid_argument("average_var: bad index");
    if (!sys.theta4_C)
        throw std::invalid_argument("average_var: requires declared class membership");
    if (!sys.overrides.empty())
        throw std::domain_error("average_var: per-prime overrides not supported symbolically");
    LocalFactorSystem out;
    out.r = sys.r - 1;
    out.table.resize(1u << out.r);
    const Qpoly q = Qpoly::q();
    const Qpoly one_minus = Qpoly::one_minus_q();
    const unsigned low = (1u << var) - 1;
    for (unsigned m = 0; m < (1u << out.r); ++m) {
        unsigned lifted = (m & low) | ((m & ~low) << 1);
        out.table[m] = one_minus * sys.table[lifted] + q * sys.table[lifted | (1u << var)];
    }
    out.theta4_C = *sys.theta4_C * 2;  // the class constant degrades at most twofold per average
    return out;
}

AverageAllResult average_all(const LocalFactorSystem& sys, i64 prime_limit) {
    if (prime_limit < 2) throw std::invalid_argument("average_all: prime limit too small");
    if (!sys.theta4_C)
        throw std::invalid_argument("average_all: requires declared class membership");
    if (!sys.overrides.empty())
        throw std::domain_error("average_all: per-prime overrides not supported symbolically");
    const Qpoly q = Qpoly::q();
    const Qpoly one_minus = Qpoly::one_minus_q();
    Qpoly theta0(0);
    for (unsigned mask = 0; mask < (1u << sys.r); ++mask) {
        int k = std::popcount(mask);
        theta0 += one_minus.pow(sys.r - k) * q.pow(k) * sys.table[mask];
    }
    if (theta0.coeff(0) != 1 || theta0.coeff(1) != 0)
        throw std::domain_error("average_all: Euler product diverges (theta_0 is not 1 + O(q^2))");
    AverageAllResult res;
    res.per_prime = theta0;
    res.prime_limit = prime_limit;
    const double k_bound = 2.0 * theta0.abs_coeff_sum(2, 0.5);
    double v = 1;
    for (i64 p : sieve_primes(prime_limit)) v *= theta0.eval_double(1.0 / static_cast<double>(p));
    res.value = v;
    res.tail = std::abs(v) * (std::exp(k_bound / static_cast<double>(prime_limit - 1)) - 1.0);
    return res;
}

namespace {

// Exact check of P(q) >= 0 on (0, 1/2]: dense rational grid including the
// endpoint, plus the lowest nonzero coefficient's sign as q -> 0+.
bool nonneg_on_half_interval(const Qpoly& P, int grid, Rational* where) {
    for (int k = 0; k <= P.degree(); ++k) {
        Rational c = P.coeff(k);
        if (c != 0) {
            if (c < 0) {
                *where = 0;
                return false;
            }
            break;
        }
    }
    for (int i = 1; i <= grid; ++i) {
        Rational q(i, 2LL * grid);
        if (P.eval(q) < 0) {
            *where = q;
            return false;
        }
    }
    return true;
}

}  // namespace

ClassCheckResult verify_class_membership(const LocalFactorSystem& sys, const Rational& C,
                                         int grid) {
    const Qpoly q = Qpoly::q();
    auto fail = [&](unsigned mask, const char* bound, const Rational& at) {
        std::ostringstream os;
        os << "subset mask " << mask << " violates " << bound << " near q = "
           << rational_to_string(at);
        return ClassCheckResult{false, os.str()};
    };
    for (unsigned mask = 0; mask < (1u << sys.r); ++mask) {
        int k = std::popcount(mask);
        Qpoly dev = sys.table[mask] - Qpoly(1);
        Qpoly cap = (k == 0) ? Qpoly(C) * q * q : (k == 1 ? Qpoly(C) * q : Qpoly(C));
        Rational at;
        if (!nonneg_on_half_interval(cap - dev, grid, &at))
            return fail(mask, "|theta_p(I) - 1| bound (upper)", at);
        if (!nonneg_on_half_interval(cap + dev, grid, &at))
            return fail(mask, "|theta_p(I) - 1| bound (lower)", at);
        if (k > 0) {
            Qpoly growth = Qpoly(1) + Qpoly(Rational(k) * C) * q - sys.table[mask];
            if (!nonneg_on_half_interval(growth, grid, &at))
                return fail(mask, "theta_p(I) <= 1 + #I C/p bound", at);
        }
    }
    return {true, {}};
}

LocalFactorSystem theta1_qa1a3() {
    LocalFactorSystem sys;
    sys.r = 7;
    sys.table.assign(1u << 7, Qpoly(0));
    auto mask_of = [](std::initializer_list<int> is) {
        unsigned m = 0;
        for (int i : is) m |= (1u << (i - 1));
        return m;
    };
    const Qpoly one(1);
    const Qpoly one_minus = Qpoly::one_minus_q();
    const Qpoly one_minus_2q({Rational(1), Rational(-2)});
    sys.table[mask_of({})] = one;
    sys.table[mask_of({1})] = one;
    sys.table[mask_of({2})] = one;
    sys.table[mask_of({7})] = one;
    for (auto is : std::vector<std::initializer_list<int>>{
             {4}, {5}, {6}, {1, 3}, {2, 3}, {3, 4}, {4, 6}, {5, 6}, {5, 7}})
        sys.table[mask_of(is)] = one_minus;
    sys.table[mask_of({3})] = one_minus_2q;
    sys.theta4_C = Rational(2);
    return sys;
}

LocalFactorSystem phi_star_system() {
    LocalFactorSystem sys;
    sys.r = 1;
    sys.table = {Qpoly(1), Qpoly::one_minus_q()};
    sys.theta4_C = Rational(1);
    return sys;
}

}  // namespace torsor
