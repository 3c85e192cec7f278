#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "torsor/intervals.hpp"
#include "torsor/surface.hpp"

namespace torsor {

// Integral point on the universal torsor: eta1..eta5 >= 1, eta6 >= 1,
// eta7 != 0, eta8/eta9 of any sign, subject to
//   eta1*eta9 + eta2*eta8 + eta4*eta5^3*eta6^2*eta7 = 0
// and the coprimality conditions of the curve configuration graph below.
struct TorsorPoint {
    std::array<i64, 9> eta{};  // eta[i-1] is eta_i

    i64 e(int i) const { return eta[i - 1]; }
    friend bool operator==(const TorsorPoint&, const TorsorPoint&) = default;
};

// Edges of the configuration graph on {1..9}: adjacent coordinates may share
// any common factor, non-adjacent ones must be coprime.
// {9,7},{9,8},{9,1},{7,8},{7,5},{5,6},{6,4},{4,3},{3,1},{8,2},{2,3}
bool graph_adjacent(int i, int j);

bool torsor_equation_holds(const TorsorPoint& p);

// eta9 = -(eta2*eta8 + eta4*eta5^3*eta6^2*eta7)/eta1 when eta1 divides the
// numerator; empty otherwise.
std::optional<i64> solve_eta9(const std::array<i64, 8>& eta);

// gcd(eta_i, eta_j) = 1 for every non-edge pair {i,j}; gcd(0,n) = |n|.
bool coprimality_ok(const TorsorPoint& p);

// The psi map to S (un-normalized coordinates). Throws if the torsor
// equation is violated.
Coords5 psi_map(const TorsorPoint& p);

// {t in R : h(eta1..eta7, t; B) <= 1}: at most two disjoint closed intervals
// (the linear |Psi0| <= B condition gives one symmetric interval, the
// quadratic |Psi4| <= B condition one or two).
std::vector<RealInterval> eta8_intervals(const std::array<i64, 7>& eta, i64 B);

// Exact integer membership in the eta8 region (128-bit arithmetic).
bool eta8_in_region(const std::array<i64, 7>& eta, i64 eta8, i64 B);

// Exact N_{U,H}(B) by enumeration of torsor points.
i64 count_torsor(i64 B, int workers = 1);

// Enumerate all counted torsor points (single-threaded; small B).
void for_each_torsor_point(i64 B, const std::function<void(const TorsorPoint&)>& fn);

// Enumerate (eta1..eta7) satisfying the height pre-bounds (Psi1, Psi2, Psi3
// <= B for some eta7, enumerated with both signs of eta7) and the coprimality
// conditions among eta1..eta7.
void for_each_admissible_eta17(i64 B, const std::function<void(const std::array<i64, 7>&)>& fn);

}  // namespace torsor
