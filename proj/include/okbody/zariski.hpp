#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "okbody/quadnum.hpp"
#include "okbody/surface.hpp"

namespace okb {

// D = P + N with P nef, N supported on catalog curves with negative definite
// Gram matrix and P.E = 0 for every support curve E. N holds only the
// strictly positive coefficients.
struct ZariskiDecomposition {
    DivisorClass P;
    std::map<std::string, Rational> N;
};

// Unique Zariski decomposition of a pseudo-effective class, by support
// growth: seed with the curves D meets negatively, solve the Gram system,
// then add every catalog curve the positive part still meets negatively.
ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const DivisorClass& d);

// One affine piece of t -> N_t along D - tC: coefficients A[E] + t B[E] on
// [t_lo, t_hi]. t_hi is rational except possibly at the final endpoint mu.
struct WalkPiece {
    QuadNum t_lo;
    QuadNum t_hi;
    std::map<std::string, Rational> A;
    std::map<std::string, Rational> B;
    std::set<std::string> support;
};

struct SegmentWalk {
    Rational nu;   // coefficient of the flag curve in N(D)
    QuadNum mu;    // sup { t : D - tC big }
    std::vector<WalkPiece> pieces; // contiguous, covering [nu, mu]
};

// Event-driven walk of the Zariski decomposition of D - tC over [nu, mu].
// Interior events happen at rational t; every accepted piece is re-verified
// against fresh decompositions at catalog-many interior points, so a wrong
// chamber guess cannot survive.
SegmentWalk segment_walk(const SurfaceModel& s, const DivisorClass& d,
                         const FlagData& flag);

} // namespace okb
