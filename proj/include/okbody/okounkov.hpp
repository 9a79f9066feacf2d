#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okbody/zariski.hpp"

namespace okb {

using PointQ2 = std::pair<QuadNum, QuadNum>;
using VertexList = std::vector<PointQ2>;

// mu(D; C) = sup { t > 0 : D - tC is big }. Polyhedral cones: the minimum of
// f(D)/f(C) over effective facets with f(C) > 0, hence rational. Quadratic
// cones: the smallest positive root of q(D - tC) = 0 (capped by the ample
// half-space wall when C meets it), a quadratic irrationality in general.
// Raises Unbounded when D - tC stays big for all t.
QuadNum mu(const SurfaceModel& s, const DivisorClass& d, const DivisorClass& c);

// The Okounkov polygon of D for the flag (C, x):
//   alpha(t) = ord_x(N_t|_C) = sum_E N_t[E] m_E,   beta(t) = alpha(t) + P_t.C
// on [nu, mu]; vertices are listed counterclockwise starting at
// (nu, alpha(nu)), collinear breakpoints merged.
struct OkounkovPolygon {
    Rational nu;
    QuadNum mu;
    std::vector<QuadNum> breakpoints;   // nu = b_0 < ... < b_k = mu
    std::vector<QuadNum> alpha_values;  // at breakpoints
    std::vector<QuadNum> beta_values;
    std::vector<Rational> alpha_slopes; // per piece
    std::vector<Rational> beta_slopes;
    VertexList vertices;
};

OkounkovPolygon okounkov_polygon(const SurfaceModel& s, const DivisorClass& d,
                                 const FlagData& flag);

// Shape check from Theorem B: piecewise linear boundary with rational slopes,
// lower boundary alpha non-decreasing and convex, upper boundary beta concave.
// "Increasing" is enforced weakly; pass strict_alpha to lint for strictness.
// Structurally broken input (self-intersecting, unordered) raises NotAPolygon.
struct TheoremBReport {
    bool pass = true;
    std::vector<std::string> violations;
};
TheoremBReport validate_theorem_b(const VertexList& vertices,
                                  bool strict_alpha = false);
TheoremBReport validate_theorem_b(const OkounkovPolygon& poly,
                                  bool strict_alpha = false);

// vol(D) = P(D)^2 must equal twice the polygon area (shoelace, exact).
struct VolumeReport {
    bool pass = false;
    Rational p_squared;
    QuadNum twice_area;
};
VolumeReport volume_checks(const SurfaceModel& s, const DivisorClass& d,
                           const OkounkovPolygon& poly);

// Rational certificate (A, B, C) with A mu^2 + B mu + C = 0: the linear
// facet certificate for polyhedral cones, the expanded q(D - tC) otherwise.
// Verified by substitution before being returned.
struct MuCertificate {
    Rational A;
    Rational B;
    Rational C;
};
MuCertificate mu_quadratic_certificate(const SurfaceModel& s, const DivisorClass& d,
                                       const DivisorClass& c);

// Seshadri constant via mu on a caller-supplied blow-up model: returns
// mu(pi* D; E). Equals epsilon(D, x) whenever that is irrational, and is an
// upper bound for it in general.
QuadNum seshadri_as_mu(const SurfaceModel& s_blowup, const DivisorClass& d_pullback,
                       const DivisorClass& exceptional);

// Exact polygon helpers (vertex cycles compared modulo rotation; orientation
// is normalized counterclockwise).
QuadNum shoelace_twice_area(const VertexList& vertices);
VertexList translated(const VertexList& vertices, const QuadNum& dt, const QuadNum& dy);
VertexList scaled_polygon(const VertexList& vertices, const Rational& lambda);
bool polygons_equal(const VertexList& a, const VertexList& b);
bool polygons_equal_up_to_translation(const VertexList& a, const VertexList& b);

} // namespace okb
