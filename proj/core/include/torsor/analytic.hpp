#pragma once

#include <iosfwd>
#include <vector>

#include "torsor/arith_one_var.hpp"
#include "torsor/integers.hpp"

namespace torsor {

// psi(t) = {t} - 1/2, in [-1/2, 1/2).
double psi_frac(double t);

struct ApCount {
    i64 count = 0;       // #{n in (t0, t1] : n == a (mod q)}, by floor arithmetic
    double main = 0;     // (t1 - t0)/q
    double psi0 = 0;     // psi((t0 - a)/q)
    double psi1 = 0;     // psi((t1 - a)/q)
    double decomposed() const { return main + psi0 - psi1; }
};

ApCount count_ap_interval(double t0, double t1, i64 a, i64 q);

// One of the six integral bounds: id in 1..6, parameters a, b != 0, exponent
// k where applicable (k > 1 for cases 2 and 6, k > 2 for case 3).
struct BoundCase {
    int id = 1;
    double a = 1, b = 1, k = 2;
};

// Measure of the case's region: closed forms for (1) and (4); for (2), (3),
// (5), (6) the u-integral of the per-u closed-form t-measure, adaptively
// refined, with the analytic tail beyond the truncation point added in.
double measure_case(const BoundCase& c, double rel_tol = 1e-6);

// Right-hand side of the stated bound.
double case_bound(const BoundCase& c);

struct SweepRow {
    BoundCase c;
    double measure = 0, bound = 0, ratio = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepRow max_row;
};

// Log-spaced grid over |a|, |b| in [1e-3, 1e3] with both signs (and the
// case's k values); returns all rows and the maximal measure/bound ratio.
SweepResult bound_ratio_sweep(int case_id, int grid_per_sign = 13, double rel_tol = 1e-6);

// "case,a,b,k,measure,bound,ratio" rows.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct KappaEnvelopeRow {
    double t = 0, sum = 0, reference = 0, ratio = 0;
};

struct KappaEnvelope {
    double kappa = 0, C = 0;
    std::vector<KappaEnvelopeRow> rows;
    double max_ratio = 0;
};

// Partial sums sum_{0 < n <= t} theta(n)/n^kappa on a t-grid against the
// three-regime reference (t^{1-kappa} log^C, log^{C+1}, constant).
KappaEnvelope sum_kappa_envelope(const MultiplicativeData& data, double kappa,
                                 const std::vector<double>& t_grid, double C);

}  // namespace torsor
