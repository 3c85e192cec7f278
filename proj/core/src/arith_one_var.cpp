#include "torsor/arith_one_var.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace torsor {

Rational MultiplicativeData::A(i64 p, int nu) const {
    assert(p >= 2 && nu >= 0);
    if (auto it = exceptional.find(p); it != exceptional.end()) {
        const auto& seq = it->second;
        return seq[std::min<size_t>(nu, seq.size() - 1)];
    }
    const Qpoly& poly = generic[std::min<size_t>(nu, generic.size() - 1)];
    return poly.eval(Rational(1, p));
}

Rational eval_theta_exact(const MultiplicativeData& data,
                          const std::vector<std::pair<i64, int>>& factorization) {
    if (!data.generic_a0_is_one())
        throw std::domain_error("eval_theta_exact: generic A_p(0) != 1");
    Rational v = data.c;
    for (auto& [p, e] : factorization) v *= data.A(p, e);
    // Exceptional primes not dividing n still contribute their A_p(0).
    for (auto& [p, seq] : data.exceptional) {
        bool divides = false;
        for (auto& [pp, e] : factorization) divides |= (pp == p);
        if (!divides) v *= seq[0];
    }
    return v;
}

Rational eval_theta_exact(const MultiplicativeData& data, i64 n) {
    if (n < 1) throw std::invalid_argument("eval_theta_exact: n must be positive");
    return eval_theta_exact(data, factorize(n));
}

ValueWithTail eval_theta(const MultiplicativeData& data, i64 n, i64 prime_limit) {
    if (data.generic_a0_is_one()) return {to_double(eval_theta_exact(data, n)), 0.0};
    // Truncated prod_{p !| n, p <= prime_limit} A_p(0), with |log A_p(0)| <= K/p^2
    // estimated from the polynomial's coefficients on (0, 1/2].
    double v = to_double(data.c);
    for (auto& [p, e] : factorize(n)) v *= to_double(data.A(p, e));
    double k_bound = 2.0 * data.generic.front().abs_coeff_sum(1, 0.5);
    for (i64 p : sieve_primes(prime_limit)) {
        if (n % p == 0) continue;
        v *= to_double(data.A(p, 0));
    }
    double tail = std::abs(v) * (std::exp(k_bound / static_cast<double>(prime_limit - 1)) - 1.0);
    return {v, tail};
}

std::vector<Rational> convolve_mu_direct(const MultiplicativeData& data, i64 N) {
    if (N < 1) throw std::invalid_argument("convolve_mu_direct: N must be positive");
    FactorSieve sieve(N);
    std::vector<Rational> theta(N + 1);
    for (i64 n = 1; n <= N; ++n) theta[n] = eval_theta_exact(data, sieve.factor(n));
    std::vector<Rational> out(N + 1);
    for (i64 d = 1; d <= N; ++d) {
        auto fd = sieve.factor(d);
        bool squarefree = true;
        for (auto& [p, e] : fd) squarefree &= (e == 1);
        if (!squarefree) continue;
        int mu = (fd.size() % 2 == 0) ? 1 : -1;
        for (i64 m = 1; d * m <= N; ++m) {
            if (mu > 0)
                out[d * m] += theta[m];
            else
                out[d * m] -= theta[m];
        }
    }
    return out;
}

Rational convolve_mu_formula(const MultiplicativeData& data, i64 n) {
    if (n < 1) throw std::invalid_argument("convolve_mu_formula: n must be positive");
    if (!data.generic_a0_is_one())
        throw std::domain_error("convolve_mu_formula: generic A_p(0) != 1");
    auto fn = factorize(n);
    Rational v = data.c;
    for (auto& [p, e] : fn) v *= data.A(p, e) - data.A(p, e - 1);
    for (auto& [p, seq] : data.exceptional) {
        bool divides = false;
        for (auto& [pp, e] : fn) divides |= (pp == p);
        if (!divides) v *= seq[0];
    }
    return v;
}

namespace {

// Per-prime Euler factor (1 - q) * sum_{nu >= 0} A_p(nu) q^nu in closed form
// (the eventually constant tail is a geometric series).
Rational euler_factor_exceptional(const std::vector<Rational>& seq, i64 p) {
    Rational q(1, p);
    Rational partial = 0, qpow = 1;
    int stab = static_cast<int>(seq.size()) - 1;
    for (int nu = 0; nu < stab; ++nu) {
        partial += seq[nu] * qpow;
        qpow *= q;
    }
    return (1 - q) * partial + seq[stab] * qpow;
}

// Symbolic generic factor F(q) = (1-q) * sum_{nu < stab} A(nu) q^nu + A(stab) q^stab.
Qpoly generic_euler_factor(const MultiplicativeData& data) {
    Qpoly partial(0), qpow(1);
    const Qpoly q = Qpoly::q();
    int stab = static_cast<int>(data.generic.size()) - 1;
    for (int nu = 0; nu < stab; ++nu) {
        partial += data.generic[nu] * qpow;
        qpow *= q;
    }
    return Qpoly::one_minus_q() * partial + data.generic[stab] * qpow;
}

}  // namespace

ValueWithTail average_order(const MultiplicativeData& data, i64 q, i64 prime_limit) {
    if (q < 1) throw std::invalid_argument("average_order: q must be positive");
    if (prime_limit < 2) throw std::invalid_argument("average_order: prime limit too small");
    const Qpoly F = generic_euler_factor(data);
    if (F.coeff(0) != 1 || F.coeff(1) != 0)
        throw std::domain_error("average_order: Euler product diverges (factor is not 1 + O(q^2))");
    // |log F| <= 2 |F - 1| <= 2 (sum_{k>=2} |c_k| (1/2)^{k-2}) q^2 on q <= 1/2.
    const double k_bound = 2.0 * F.abs_coeff_sum(2, 0.5);
    double v = to_double(data.c);
    for (i64 p : sieve_primes(prime_limit)) {
        if (q % p == 0) {
            v *= to_double(data.A(p, 0));
        } else if (auto it = data.exceptional.find(p); it != data.exceptional.end()) {
            v *= to_double(euler_factor_exceptional(it->second, p));
        } else {
            v *= F.eval_double(1.0 / static_cast<double>(p));
        }
    }
    double tail = std::abs(v) * (std::exp(k_bound / static_cast<double>(prime_limit - 1)) - 1.0);
    return {v, tail};
}

double empirical_average(const MultiplicativeData& data, i64 q, i64 a, i64 t,
                         const FactorSieve& sieve) {
    if (q < 1 || t < 1) throw std::invalid_argument("empirical_average: bad q or t");
    if (gcd64(a, q) != 1) throw std::invalid_argument("empirical_average: gcd(a, q) != 1");
    double sum = 0;
    for (i64 n = (mod_norm(a, q) == 0 ? q : mod_norm(a, q)); n <= t; n += q)
        sum += to_double(eval_theta_exact(data, sieve.factor(n)));
    return sum;
}

double empirical_average(const MultiplicativeData& data, i64 q, i64 a, i64 t) {
    FactorSieve sieve(t);
    return empirical_average(data, q, a, t, sieve);
}

MultiplicativeData phi_star_data() {
    MultiplicativeData d;
    d.name = "phi_star";
    d.generic = {Qpoly(1), Qpoly::one_minus_q()};
    d.theta2 = Theta2Params{1, 1.0, 1.0, 1.0};
    return d;
}

MultiplicativeData phi_dagger_data() {
    MultiplicativeData d;
    d.name = "phi_dagger";
    d.generic = {Qpoly(1), Qpoly({Rational(1), Rational(1)})};
    d.theta2 = Theta2Params{1, 1.0, 1.0, 1.0};
    return d;
}

MultiplicativeData f_ab_data(i64 a, i64 b) {
    if (a < 1 || b < 1) throw std::invalid_argument("f_ab_data: a, b must be positive");
    MultiplicativeData d;
    d.name = "f_" + std::to_string(a) + "_" + std::to_string(b);
    d.generic = {Qpoly(1), Qpoly::one_minus_q()};
    for (i64 p : prime_divisors(b)) d.exceptional[p] = {Rational(1), Rational(0)};
    for (i64 p : prime_divisors(a))
        if (b % p != 0) d.exceptional[p] = {Rational(1), Rational(1)};
    d.theta2 = Theta2Params{radical(b), 1.0, 1.0, 1.0};
    return d;
}

MultiplicativeData const_one_data() {
    MultiplicativeData d;
    d.name = "one";
    d.generic = {Qpoly(1), Qpoly(1)};
    d.theta2 = Theta2Params{1, 1.0, 1.0, 1.0};
    return d;
}

MultiplicativeData omega_power_data(int base) {
    if (base < 1) throw std::invalid_argument("omega_power_data: base must be >= 1");
    MultiplicativeData d;
    d.name = std::to_string(base) + "^omega";
    d.generic = {Qpoly(1), Qpoly(Rational(base))};
    return d;
}

}  // namespace torsor
