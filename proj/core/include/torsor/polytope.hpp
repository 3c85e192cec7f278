#pragma once

#include <stdexcept>
#include <vector>

#include "torsor/rational.hpp"

namespace torsor {

enum class Rel { LE, GE, EQ };

struct HalfSpace {
    std::vector<Rational> coeffs;
    Rel rel = Rel::LE;
    Rational rhs = 0;
};

// H-description with exact rational data.
struct RationalPolytope {
    int dim = 0;
    std::vector<HalfSpace> constraints;
};

struct UnboundedPolytope : std::runtime_error {
    UnboundedPolytope() : std::runtime_error("polytope is unbounded") {}
};
struct EmptyPolytope : std::runtime_error {
    EmptyPolytope() : std::runtime_error("polytope is empty") {}
};

// Substitute each equality constraint into the rest (coordinate projection),
// reducing the dimension by one per equality.
RationalPolytope eliminate_equalities(const RationalPolytope& P);

// All vertices of an inequality-only polytope (brute-force basis enumeration).
std::vector<std::vector<Rational>> enumerate_vertices(const RationalPolytope& P);

// Exact Lebesgue volume by vertex enumeration and recursive face
// triangulation. Equalities are eliminated first (projection); the volume of
// a lower-dimensional polytope is 0. Throws UnboundedPolytope/EmptyPolytope.
Rational polytope_volume_exact(const RationalPolytope& P);

// Stock polytopes.
RationalPolytope unit_cube(int d);
RationalPolytope standard_simplex(int d);  // t >= 0, sum t <= 1

// The nef-cone slice of the quartic surface: 6 variables, one equality
//   2t1+2t2+3t3+2t4+t6 = 1,  t1+t2+t3-2t5-t6 >= 0,  t >= 0,
// and its 5-variable projection
//   2t1+2t2+3t3+2t4 <= 1,  3t1+3t2+4t3+2t4-2t5 >= 1,  t >= 0.
RationalPolytope qa1a3_P();
RationalPolytope qa1a3_P_prime();

}  // namespace torsor
