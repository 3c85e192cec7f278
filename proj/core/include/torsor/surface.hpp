#pragma once

#include <array>
#include <vector>

#include "torsor/integers.hpp"

namespace torsor {

// The singular quartic del Pezzo surface S in P^4:
//   x0^2 + x0*x3 + x2*x4 = 0,   x1*x3 - x2^2 = 0,
// with an A3 singularity at (0:0:0:0:1), an A1 singularity at (0:1:0:0:0),
// and three lines {x0=x1=x2=0}, {x0+x3=x1=x2=0}, {x0=x2=x3=0}.
// U is the complement of the lines; every point of U has x2 != 0.

using Coords5 = std::array<i64, 5>;

// Primitive representative with x2 > 0 (unique per projective point of U).
struct SurfacePoint {
    i64 x0 = 0, x1 = 0, x2 = 0, x3 = 0, x4 = 0;

    Coords5 coords() const { return {x0, x1, x2, x3, x4}; }
    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
    friend auto operator<=>(const SurfacePoint&, const SurfacePoint&) = default;

    // Divides out the gcd and fixes the sign of x2; requires x2 != 0 and a
    // point of the surface (not checked here).
    static SurfacePoint normalize(const Coords5& x);
};

// Both defining quadrics vanish exactly.
bool on_surface(const Coords5& x);

// x lies on one of the three lines (assumes on_surface(x)).
bool on_line(const Coords5& x);

// Anticanonical height: max |coordinate| of the primitive representative.
// Throws std::invalid_argument on the zero tuple.
i64 height(const Coords5& x);

// N_{U,H}(B) by direct search on the defining equations.
i64 count_naive(i64 B, int workers = 1);

// Same enumeration, returning the normalized point set (for small B).
std::vector<SurfacePoint> naive_points(i64 B);

// Second, independent oracle: full box scan over [-B,B]^5. Quadratic+ cost in
// the box volume; intended for B <= 5.
i64 count_box_oracle(i64 B);

}  // namespace torsor
