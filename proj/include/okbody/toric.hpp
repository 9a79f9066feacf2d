#pragma once

#include <array>
#include <vector>

#include "okbody/okounkov.hpp"
#include "okbody/surface.hpp"

namespace okb {

using RayZ2 = std::array<mpz_class, 2>;

// Smooth complete toric surface: cyclically ordered (counterclockwise)
// primitive rays with consecutive determinants 1. The standard identity
// sum of D_i^2 = 12 - 3r is rechecked wherever a fan is produced.
struct ToricSurface {
    std::vector<RayZ2> rays;
};

struct ToricDivisor {
    ToricSurface surface;
    std::vector<Rational> a; // coefficient per ray
};

// Throws InvalidFan when the ray list is not a smooth complete ccw fan.
void validate_fan(const ToricSurface& t);

// Rational polygon, counterclockwise vertex list.
using PolyQ = std::vector<std::pair<Rational, Rational>>;

// Half-plane intersection { u : <u, v_i> + a_i >= 0 }; may be empty or
// degenerate (a point or segment comes back with fewer than 3 vertices).
PolyQ polytope_of_divisor(const ToricSurface& t, const std::vector<Rational>& a);

// The fan-derived surface model plus the data needed to move between ray
// divisors and lattice classes: class vectors per ray and the two rays
// eliminated by the character relations ((1,0) and (0,1) when present).
struct ToricModel {
    SurfaceModel model;
    std::vector<VecQ> ray_classes;
    std::vector<std::string> ray_names;
    std::array<int, 2> dropped;
};

ToricModel toric_surface_model(const ToricSurface& t);

DivisorClass toric_divisor_class(const ToricModel& tm, const std::vector<Rational>& a);

// Flag along C = D_{i1} with x = D_{i1} cap D_{i2} (transverse, so the only
// point multiplicity is m = 1 at D_{i2} when that ray is a catalog curve).
FlagData toric_flag(const ToricModel& tm, int i1, int i2);

// Image of the divisor polytope under psi(u) = (<u, v_{i1}>, <u, v_{i2}>);
// the identity map for the standard flag rays (1,0), (0,1). The rays must be
// adjacent with determinant one.
PolyQ okounkov_via_psi(const ToricSurface& t, const std::vector<Rational>& a,
                       int i1, int i2);

// Sort counterclockwise, complete across reflex gaps, then subdivide every
// gap with determinant > 1 by inserting the minimal chain of primitive rays.
// Requires (1,0) and (0,1) among the inputs; never inserts a ray in the open
// first quadrant.
ToricSurface smooth_complete_fan(std::vector<RayZ2> rays);

// Theorem B converse: translate the polygon into the positive quadrant
// touching both axes, take primitive inward edge normals, adjoin the axis
// rays with coefficient zero, complete and smooth the fan, and extend the
// coefficients by support values so the divisor polytope is the polygon.
struct Realization {
    ToricDivisor divisor;
    int flag_i1 = -1;
    int flag_i2 = -1;
    Rational shift_t; // applied translation
    Rational shift_y;
};

Realization realize_polygon(const PolyQ& poly);

VertexList to_vertex_list(const PolyQ& p);

} // namespace okb
