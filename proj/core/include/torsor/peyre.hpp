#pragma once

#include <optional>
#include <string>

#include "torsor/rational.hpp"

namespace torsor {

// alpha(S~) as the exact volume of the 5-dimensional nef-cone slice.
Rational alpha_exact();

// omega_p = (1 - 1/p)^6 (1 + 6/p + 1/p^2).
Rational omega_p_factor_exact(i64 p);

// prod_{p <= prime_limit} omega_p with a tail bound from |log omega_p| <= K/p^2.
ValueWithTail omega_p_product(i64 prime_limit);

enum class OmegaInfMethod { MonteCarlo, Adaptive };

const char* omega_inf_method_name(OmegaInfMethod m);  // "eta-monte-carlo" / "eta-adaptive"

struct OmegaInfResult {
    double value = 0.0;
    double error = 0.0;  // sigma for MC, refinement error estimate for adaptive
    OmegaInfMethod method = OmegaInfMethod::MonteCarlo;
    i64 samples = 0;  // samples or integrand evaluations spent
    u64 seed = 0;
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The real-density integral over {eta6 in [0,1], |eta6^2 eta7| <= 1,
// |eta6^3 eta7^2| <= 1, |eta6 eta7 eta8| <= 1, |eta7 eta8^2 + eta6^2 eta7^2
// eta8| <= 1}. Throws BudgetExhausted when the budget runs out before the
// requested relative error.
OmegaInfResult omega_inf(OmegaInfMethod method, i64 budget, u64 seed = 1,
                         double target_rel_error = 5e-3, bool half_domain = false);

struct McEstimate {
    double value = 0.0;
    double sigma = 0.0;
    i64 samples = 0;
    u64 seed = 0;
};

// Monte Carlo estimate of the integral of 1/eta1 over the region R'(B)
// (log-uniform outer sampling over the nef-cone slice, conditional boxes for
// (eta6, eta7, eta8)). Requires B >= 3.
McEstimate volume_V0_prime(double B, i64 samples, u64 seed = 1, int workers = 1);

// The same integral over R(B) (eta1..eta6 >= 1, |eta7| >= 1, h <= 1).
McEstimate volume_V0(double B, i64 samples, u64 seed = 1, int workers = 1);

struct Constants {
    Rational alpha = 0;
    ValueWithTail omega_p;
    i64 omega_p_prime_limit = 0;
    OmegaInfResult omega_inf;

    std::string to_json() const;
    static Constants from_json(const std::string& text);
};

Constants compute_constants(i64 prime_limit, i64 samples, u64 seed,
                            OmegaInfMethod method = OmegaInfMethod::MonteCarlo);

// alpha * (prod omega_p) * omega_inf * B (log B)^5. Requires B >= 3 and all
// constants present (throws std::invalid_argument otherwise).
double predicted_main_term(double B, const Constants& c);

}  // namespace torsor
