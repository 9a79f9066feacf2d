#pragma once

#include <optional>
#include <random>

#include "okbody/toric.hpp"
#include "okbody/zariski.hpp"

// Independent oracles and fixtures used by the self-check suite and the unit
// tests. Everything here deliberately avoids the code paths it is checking:
// signs come from interval refinement, decompositions from exhaustive subset
// search, square-free parts from a descending perfect-square scan.
namespace okb::oracle {

// Sign of a + b sqrt(d) from a plain interval enclosure of sqrt(d) at the
// given binary precision; nullopt when the enclosure still straddles zero.
std::optional<int> interval_sign(const QuadNum& x, unsigned bits);

// Largest square divisor by scanning f = floor(sqrt(n)) .. 1 for f^2 | n.
mpz_class squarefree_part_by_scan(const mpz_class& n);

// Exhaustive Zariski decomposition: try every subset of catalog curves as a
// support, solve the Gram system, keep solutions with N >= 0 and P nef that
// are orthogonal to their support. Returns all distinct valid decompositions.
std::vector<ZariskiDecomposition> brute_force_decompositions(const SurfaceModel& s,
                                                             const DivisorClass& d);

// Named polyhedral fixtures (generators and facets spelled out by hand).
SurfaceModel fixture_f1();          // blow-up of the plane: basis H, E
SurfaceModel fixture_bl2p2();       // two-point blow-up: H, E1, E2
SurfaceModel fixture_bl3p2();       // three-point blow-up: H, E1, E2, E3
SurfaceModel fixture_p2();          // the plane itself
SurfaceModel fixture_p1p1();        // quadric: f1, f2
SurfaceModel fixture_blowup_seshadri(); // polyhedral blow-up model for mu = epsilon

// Uniformly random reduced fraction with |numerator| <= bound_num,
// 1 <= denominator <= bound_den.
Rational random_rational(std::mt19937_64& rng, long bound_num, long bound_den,
                         bool non_negative = false);

// Random big integral divisor class on a polyhedral fixture (rejection
// sampling against the strict facet inequalities).
DivisorClass random_big_class(std::mt19937_64& rng, const SurfaceModel& s,
                              long coeff_bound);

// Random polygon of the admissible shape: convex non-decreasing lower
// boundary, concave upper boundary, rational slopes with numerators and
// denominators bounded by 7, at most max_pieces pieces per boundary.
PolyQ random_theorem_b_polygon(std::mt19937_64& rng, int max_pieces = 6);

} // namespace okb::oracle
