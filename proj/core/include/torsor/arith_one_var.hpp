#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/primes.hpp"
#include "torsor/qpoly.hpp"
#include "torsor/rational.hpp"

namespace torsor {

// theta(n) = c * prod_{p^nu || n} A_p(nu) * prod_{p !| n} A_p(0), with A_p
// given by a generic rule in q = 1/p (eventually constant in nu) plus finitely
// many exceptional primes with explicit eventually-constant sequences.
struct Theta2Params {
    i64 b = 1;
    double C1 = 1.0, C2 = 1.0, C3 = 1.0;
};

struct MultiplicativeData {
    std::string name;
    Rational c = 1;
    // Generic A_p(nu) = generic[min(nu, size-1)](1/p); generic[0] is A_p(0).
    std::vector<Qpoly> generic{Qpoly(1), Qpoly(1)};
    // Exceptional primes: explicit A_p(0), A_p(1), ..., A_p(stab).
    std::map<i64, std::vector<Rational>> exceptional;
    std::optional<Theta2Params> theta2;

    Rational A(i64 p, int nu) const;
    bool generic_a0_is_one() const { return generic.front() == Qpoly(1); }
};

// Exact evaluation; requires a generic A_p(0) identically 1 (all shipped
// instances), so the p !| n product is empty.
Rational eval_theta_exact(const MultiplicativeData& data, i64 n);
Rational eval_theta_exact(const MultiplicativeData& data,
                          const std::vector<std::pair<i64, int>>& factorization);

// Float evaluation; when the generic A_p(0) != 1, the p !| n tail is truncated
// at prime_limit and a tail estimate is recorded.
ValueWithTail eval_theta(const MultiplicativeData& data, i64 n, i64 prime_limit = 100000);

// (theta * mu)(n) for all n <= N by direct divisor sums.
std::vector<Rational> convolve_mu_direct(const MultiplicativeData& data, i64 N);

// Closed form: c * prod_{p !| n} A_p(0) * prod_{p^nu || n} (A_p(nu) - A_p(nu-1)).
Rational convolve_mu_formula(const MultiplicativeData& data, i64 n);

// Average order A(theta(n), n, q) as a truncated Euler product with tail
// bound. Throws std::domain_error when the product diverges (nonzero linear
// coefficient in the generic Euler factor).
ValueWithTail average_order(const MultiplicativeData& data, i64 q, i64 prime_limit = 1000000);

// Sum of theta(n) over 0 < n <= t, n == a (mod q); requires gcd(a, q) = 1.
double empirical_average(const MultiplicativeData& data, i64 q, i64 a, i64 t);
double empirical_average(const MultiplicativeData& data, i64 q, i64 a, i64 t,
                         const FactorSieve& sieve);

// Shipped instances.
MultiplicativeData phi_star_data();    // A_p(nu>=1) = 1 - 1/p
MultiplicativeData phi_dagger_data();  // A_p(nu>=1) = 1 + 1/p
MultiplicativeData f_ab_data(i64 a, i64 b);
MultiplicativeData const_one_data();
MultiplicativeData omega_power_data(int base);  // theta(n) = base^{omega(n)}

}  // namespace torsor
