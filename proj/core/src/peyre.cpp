#include "torsor/peyre.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <functional>
#include <queue>
#include <thread>

#include <json.hpp>

#include "torsor/intervals.hpp"
#include "torsor/parallel.hpp"
#include "torsor/polytope.hpp"
#include "torsor/primes.hpp"
#include "torsor/rng.hpp"

namespace torsor {

Rational alpha_exact() {
    static const Rational alpha = polytope_volume_exact(qa1a3_P_prime());
    return alpha;
}

Rational omega_p_factor_exact(i64 p) {
    Rational q(1, p);
    Rational a = 1 - q;
    Rational a2 = a * a;
    return a2 * a2 * a2 * (1 + 6 * q + q * q);
}

ValueWithTail omega_p_product(i64 prime_limit) {
    if (prime_limit < 100) throw std::invalid_argument("omega_p_product: prime_limit >= 100");
    double v = 1.0;
    for (i64 p : sieve_primes(prime_limit)) {
        double q = 1.0 / static_cast<double>(p);
        double a = 1.0 - q;
        double a3 = a * a * a;
        v *= a3 * a3 * (1.0 + 6.0 * q + q * q);
    }
    // omega_p = 1 - 20 q^2 + O(q^3); |log omega_p| <= 42 q^2 for p > 100.
    const double k_bound = 42.0;
    double tail = std::abs(v) * (std::exp(k_bound / static_cast<double>(prime_limit - 1)) - 1.0);
    return {v, tail};
}

const char* omega_inf_method_name(OmegaInfMethod m) {
    return m == OmegaInfMethod::MonteCarlo ? "eta-monte-carlo" : "eta-adaptive";
}

namespace {

// Length measure of the eta8 slice of the omega_inf region at (x, y) =
// (eta6, eta7): {z : |x y z| <= 1, |y z^2 + x^2 y^2 z| <= 1}.
double eta8_slice_length(double x, double y) {
    if (y == 0.0) return 0.0;
    auto quad = solve_abs_quadratic(y, x * x * y * y, 1.0);
    if (x > 0.0) {
        double L = 1.0 / (x * std::abs(y));
        quad = clip_intervals(quad, -L, L);
    }
    return total_length(quad);
}

bool omega_inf_region_contains(double x, double y, double z) {
    if (x < 0.0 || x > 1.0) return false;
    if (std::abs(x * x * y) > 1.0) return false;
    if (std::abs(x * x * x * y * y) > 1.0) return false;
    if (std::abs(x * y * z) > 1.0) return false;
    if (std::abs(y * z * z + x * x * y * y * z) > 1.0) return false;
    return true;
}

// One conditional sample of (eta6, eta7, eta8) given the outer coordinates,
// drawn from an enclosing product density whose weight stays integrable:
// eta6 = U6 z^4, |eta7| = U7(eta6) s^2, eta8 uniform in the per-sample box.
struct InnerSample {
    double e6 = 0, e7 = 0, e8 = 0;
    double weight = 0;  // enclosing measure carried by this sample
};

InnerSample draw_inner(SampleRng& rng, double B, double e1, double e2, double e3, double e4,
                       double e5, bool half_domain) {
    InnerSample out;
    const double U6 = B / (e1 * e1 * e2 * e2 * e3 * e3 * e3 * e4 * e4);
    const double z = rng.uniform01();
    const double s = rng.uniform01();
    const double u = rng.uniform01();
    const bool negative = half_domain ? false : rng.coin();
    if (z == 0.0 || s == 0.0) return out;
    const double e6 = U6 * z * z * z * z;
    double w = 4.0 * U6 * z * z * z;
    const double U7 =
        std::min(std::sqrt(B / (e3 * e4 * e4 * e5 * e5 * e5 * e5 * e6 * e6 * e6)),
                 B / (e1 * e2 * e3 * e3 * e4 * e4 * e5 * e5 * e6 * e6));
    const double a7 = U7 * s * s;
    if (a7 == 0.0) return out;
    w *= 2.0 * U7 * s * (half_domain ? 1.0 : 2.0);
    // |eta8| bound: Psi0, and the positive root of |A| x^2 - C x - D with
    // A = e2 e7, C = e4 e5^3 e6^2 e7^2, D = e1 B (encloses the |Psi4| set).
    const double L8 = B / (e2 * e3 * e4 * e5 * e6 * a7);
    const double shift = e4 * e5 * e5 * e5 * e6 * e6 * a7 / e2;
    const double root = shift / 2.0 + std::sqrt(shift * shift / 4.0 + e1 * B / (e2 * a7));
    const double M8 = std::min(L8, root);
    w *= 2.0 * M8;
    out.e6 = e6;
    out.e7 = negative ? -a7 : a7;
    out.e8 = M8 * (2.0 * u - 1.0);
    out.weight = w;
    return out;
}

struct McAccum {
    double sum = 0, sumsq = 0;
};

McEstimate finish(const McAccum& acc, i64 samples, u64 seed) {
    const double n = static_cast<double>(samples);
    McEstimate est;
    est.value = acc.sum / n;
    est.sigma = std::sqrt(std::max(0.0, acc.sumsq / n - est.value * est.value) / n);
    est.samples = samples;
    est.seed = seed;
    return est;
}

// Mean of one(rng_i) over sample indices; counter-based streams keep the
// result independent of the worker count.
McEstimate mc_over_samples(i64 samples, u64 seed, int workers,
                           const std::function<double(SampleRng&)>& one) {
    workers = resolve_workers(workers);
    const i64 chunk = 1 << 14;
    std::vector<std::pair<i64, i64>> tasks;
    for (i64 lo = 0; lo < samples; lo += chunk)
        tasks.emplace_back(lo, std::min(samples, lo + chunk));
    std::vector<McAccum> partial(tasks.size());
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            McAccum acc;
            for (i64 i = tasks[t].first; i < tasks[t].second; ++i) {
                SampleRng rng(seed, static_cast<u64>(i));
                double f = one(rng);
                acc.sum += f;
                acc.sumsq += f * f;
            }
            partial[t] = acc;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers - 1; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    McAccum total;
    for (const auto& a : partial) {
        total.sum += a.sum;
        total.sumsq += a.sumsq;
    }
    return finish(total, samples, seed);
}

OmegaInfResult omega_inf_mc(i64 budget, u64 seed, double target_rel_error, bool half_domain) {
    McEstimate est = mc_over_samples(budget, seed, 0, [&](SampleRng& rng) -> double {
        InnerSample smp = draw_inner(rng, 1.0, 1, 1, 1, 1, 1, half_domain);
        if (smp.weight <= 0 || !omega_inf_region_contains(smp.e6, smp.e7, smp.e8)) return 0.0;
        return smp.weight * (half_domain ? 2.0 : 1.0);
    });
    OmegaInfResult res;
    res.value = est.value;
    res.error = est.sigma;
    res.method = OmegaInfMethod::MonteCarlo;
    res.samples = budget;
    res.seed = seed;
    if (res.error > target_rel_error * std::abs(res.value))
        throw BudgetExhausted("omega_inf: MC budget exhausted before target error");
    return res;
}

// Integrand of the adaptive route on the (z, s) unit square: eta6 = z^4,
// eta7 = eta6^{-3/2} s^2 > 0, doubled for the (eta7, eta8) sign symmetry.
double omega_inf_integrand(double z, double s) {
    if (z <= 0.0 || s <= 0.0) return 0.0;
    const double e6 = z * z * z * z;
    const double U7 = 1.0 / (e6 * std::sqrt(e6));
    const double y = U7 * s * s;
    if (e6 * e6 * y > 1.0) return 0.0;
    return 2.0 * eta8_slice_length(e6, y) * (4.0 * z * z * z) * (2.0 * U7 * s);
}

double simpson2(double x0, double x1, double y0, double y1, i64& evals) {
    const double xs[3] = {x0, 0.5 * (x0 + x1), x1};
    const double ys[3] = {y0, 0.5 * (y0 + y1), y1};
    const double wt[3] = {1.0, 4.0, 1.0};
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += wt[i] * wt[j] * omega_inf_integrand(xs[i], ys[j]);
    evals += 9;
    return s * (x1 - x0) * (y1 - y0) / 36.0;
}

OmegaInfResult omega_inf_adaptive(i64 budget, double target_rel_error) {
    struct Cell {
        double x0, x1, y0, y1, value, err;
        bool operator<(const Cell& o) const { return err < o.err; }
    };
    i64 evals = 0;
    // Refine a cell once: four children carrying one-step error estimates.
    auto split = [&](const Cell& c) {
        std::array<Cell, 4> kids;
        double xm = 0.5 * (c.x0 + c.x1), ym = 0.5 * (c.y0 + c.y1);
        kids[0] = {c.x0, xm, c.y0, ym, 0, 0};
        kids[1] = {xm, c.x1, c.y0, ym, 0, 0};
        kids[2] = {c.x0, xm, ym, c.y1, 0, 0};
        kids[3] = {xm, c.x1, ym, c.y1, 0, 0};
        for (auto& k : kids) {
            double coarse = simpson2(k.x0, k.x1, k.y0, k.y1, evals);
            double xk = 0.5 * (k.x0 + k.x1), yk = 0.5 * (k.y0 + k.y1);
            double fine =
                simpson2(k.x0, xk, k.y0, yk, evals) + simpson2(xk, k.x1, k.y0, yk, evals) +
                simpson2(k.x0, xk, yk, k.y1, evals) + simpson2(xk, k.x1, yk, k.y1, evals);
            k.value = fine;
            k.err = std::abs(fine - coarse);
        }
        return kids;
    };
    std::priority_queue<Cell> heap;
    double total = 0, err_sum = 0;
    const int n0 = 8;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            Cell seed{static_cast<double>(i) / n0, static_cast<double>(i + 1) / n0,
                      static_cast<double>(j) / n0, static_cast<double>(j + 1) / n0, 0, 0};
            for (const Cell& k : split(seed)) {
                total += k.value;
                err_sum += k.err;
                heap.push(k);
            }
        }
    while (err_sum > target_rel_error * std::abs(total) && !heap.empty()) {
        if (evals >= budget)
            throw BudgetExhausted("omega_inf: adaptive budget exhausted before target error");
        Cell c = heap.top();
        heap.pop();
        total -= c.value;
        err_sum -= c.err;
        for (const Cell& k : split(c)) {
            total += k.value;
            err_sum += k.err;
            heap.push(k);
        }
    }
    OmegaInfResult res;
    res.value = total;
    res.error = err_sum;
    res.method = OmegaInfMethod::Adaptive;
    res.samples = evals;
    res.seed = 0;
    return res;
}

// h(eta'; B) <= 1 on real coordinates, eta9 eliminated.
bool h_region_contains(double B, const double e[8]) {
    const double p0 = e[1] * e[2] * e[3] * e[4] * e[5] * e[6] * e[7];
    const double p1 = e[0] * e[0] * e[1] * e[1] * e[2] * e[2] * e[2] * e[3] * e[3] * e[5];
    const double p2 = e[0] * e[1] * e[2] * e[2] * e[3] * e[3] * e[4] * e[4] * e[5] * e[5] * e[6];
    const double p3 =
        e[2] * e[3] * e[3] * e[4] * e[4] * e[4] * e[4] * e[5] * e[5] * e[5] * e[6] * e[6];
    const double p4 = (e[1] * e[6] * e[7] * e[7] +
                       e[3] * e[4] * e[4] * e[4] * e[5] * e[5] * e[6] * e[6] * e[7]) /
                      e[0];
    return std::abs(p0) <= B && p1 <= B && std::abs(p2) <= B && p3 <= B && std::abs(p4) <= B;
}

}  // namespace

OmegaInfResult omega_inf(OmegaInfMethod method, i64 budget, u64 seed, double target_rel_error,
                         bool half_domain) {
    if (budget < 1000) throw std::invalid_argument("omega_inf: budget too small");
    if (method == OmegaInfMethod::MonteCarlo)
        return omega_inf_mc(budget, seed, target_rel_error, half_domain);
    return omega_inf_adaptive(budget, target_rel_error);
}

McEstimate volume_V0_prime(double B, i64 samples, u64 seed, int workers) {
    if (B < 3) throw std::invalid_argument("volume_V0_prime: B must be >= 3");
    if (samples < 1) throw std::invalid_argument("volume_V0_prime: samples must be positive");
    const double lb = std::log(B);
    // log-coordinate box enclosing the nef-cone slice.
    const double cap[5] = {0.5, 0.5, 1.0 / 3.0, 0.5, 0.25};
    const double box_vol = cap[0] * cap[1] * cap[2] * cap[3] * cap[4];
    auto one = [&](SampleRng& rng) -> double {
        double t[5];
        for (int i = 0; i < 5; ++i) t[i] = rng.uniform(0.0, cap[i]);
        if (2 * t[0] + 2 * t[1] + 3 * t[2] + 2 * t[3] > 1) return 0.0;
        if (3 * t[0] + 3 * t[1] + 4 * t[2] + 2 * t[3] - 2 * t[4] < 1) return 0.0;
        double e[8];
        for (int i = 0; i < 5; ++i) e[i] = std::exp(t[i] * lb);
        InnerSample smp = draw_inner(rng, B, e[0], e[1], e[2], e[3], e[4], false);
        if (smp.weight <= 0) return 0.0;
        e[5] = smp.e6;
        e[6] = smp.e7;
        e[7] = smp.e8;
        if (!h_region_contains(B, e)) return 0.0;
        const double outer = box_vol * std::pow(lb, 5) * e[1] * e[2] * e[3] * e[4];
        return outer * smp.weight;
    };
    return mc_over_samples(samples, seed, workers, one);
}

McEstimate volume_V0(double B, i64 samples, u64 seed, int workers) {
    if (B < 3) throw std::invalid_argument("volume_V0: B must be >= 3");
    if (samples < 1) throw std::invalid_argument("volume_V0: samples must be positive");
    const double lb = std::log(B);
    const double cap[6] = {0.5, 0.5, 1.0 / 3.0, 0.5, 0.25, 1.0 / 3.0};
    const double box_vol = cap[0] * cap[1] * cap[2] * cap[3] * cap[4] * cap[5];
    auto one = [&](SampleRng& rng) -> double {
        double t[6];
        for (int i = 0; i < 6; ++i) t[i] = rng.uniform(0.0, cap[i]);
        // Necessary for a nonempty eta7 range with |eta7| >= 1:
        // Psi1 <= B; Psi3 <= B and Psi2 <= B at |eta7| = 1.
        if (2 * t[0] + 2 * t[1] + 3 * t[2] + 2 * t[3] + t[5] > 1) return 0.0;
        if (t[2] + 2 * t[3] + 4 * t[4] + 3 * t[5] > 1) return 0.0;
        if (t[0] + t[1] + 2 * t[2] + 2 * t[3] + 2 * t[4] + 2 * t[5] > 1) return 0.0;
        double e[8];
        for (int i = 0; i < 6; ++i) e[i] = std::exp(t[i] * lb);
        const double U7 = std::min(
            std::sqrt(B / (e[2] * e[3] * e[3] * e[4] * e[4] * e[4] * e[4] * e[5] * e[5] * e[5])),
            B / (e[0] * e[1] * e[2] * e[2] * e[3] * e[3] * e[4] * e[4] * e[5] * e[5]));
        if (U7 < 1.0) return 0.0;
        const double lnU7 = std::log(U7);
        double w = box_vol * std::pow(lb, 6) * e[1] * e[2] * e[3] * e[4] * e[5];
        const double a7 = std::exp(rng.uniform01() * lnU7);
        w *= 2.0 * a7 * lnU7;
        e[6] = rng.coin() ? -a7 : a7;
        const double L8 = B / (e[1] * e[2] * e[3] * e[4] * e[5] * a7);
        const double shift = e[3] * e[4] * e[4] * e[4] * e[5] * e[5] * a7 / e[1];
        const double root =
            shift / 2.0 + std::sqrt(shift * shift / 4.0 + e[0] * B / (e[1] * a7));
        const double M8 = std::min(L8, root);
        e[7] = M8 * (2.0 * rng.uniform01() - 1.0);
        w *= 2.0 * M8;
        if (!h_region_contains(B, e)) return 0.0;
        return w;
    };
    return mc_over_samples(samples, seed, workers, one);
}

std::string Constants::to_json() const {
    nlohmann::json j;
    j["alpha"] = rational_to_string(alpha);
    j["omega_p"] = {{"value", omega_p.value},
                    {"tail", omega_p.tail},
                    {"prime_limit", omega_p_prime_limit}};
    j["omega_inf"] = {{"value", omega_inf.value},
                      {"sigma", omega_inf.error},
                      {"method", omega_inf_method_name(omega_inf.method)},
                      {"samples", omega_inf.samples},
                      {"seed", omega_inf.seed}};
    return j.dump(2);
}

Constants Constants::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Constants c;
    c.alpha = rational_from_string(j.at("alpha").get<std::string>());
    c.omega_p.value = j.at("omega_p").at("value").get<double>();
    c.omega_p.tail = j.at("omega_p").at("tail").get<double>();
    c.omega_p_prime_limit = j.at("omega_p").at("prime_limit").get<i64>();
    c.omega_inf.value = j.at("omega_inf").at("value").get<double>();
    c.omega_inf.error = j.at("omega_inf").at("sigma").get<double>();
    c.omega_inf.method = j.at("omega_inf").at("method").get<std::string>() == "eta-adaptive"
                             ? OmegaInfMethod::Adaptive
                             : OmegaInfMethod::MonteCarlo;
    c.omega_inf.samples = j.at("omega_inf").at("samples").get<i64>();
    c.omega_inf.seed = j.at("omega_inf").at("seed").get<u64>();
    return c;
}

Constants compute_constants(i64 prime_limit, i64 samples, u64 seed, OmegaInfMethod method) {
    Constants c;
    c.alpha = alpha_exact();
    c.omega_p = omega_p_product(prime_limit);
    c.omega_p_prime_limit = prime_limit;
    c.omega_inf = omega_inf(method, samples, seed, 1.0);  // callers retighten as needed
    return c;
}

double predicted_main_term(double B, const Constants& c) {
    if (B < 3) throw std::invalid_argument("predicted_main_term: B must be >= 3");
    if (c.alpha == 0 || c.omega_p.value == 0 || c.omega_inf.value == 0)
        throw std::invalid_argument("predicted_main_term: constants not computed");
    double lb = std::log(B);
    return to_double(c.alpha) * c.omega_p.value * c.omega_inf.value * B * std::pow(lb, 5);
}

}  // namespace torsor
