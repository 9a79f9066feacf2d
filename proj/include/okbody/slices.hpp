#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "okbody/okounkov.hpp"
#include "okbody/surface.hpp"

namespace okb {

// The restriction line (v0 - r w) swept by the first flag step of a 3-fold,
// living on the slice surface; must stay pseudo-effective on the closed
// range (checked at the endpoints, which suffices by convexity).
struct DivisorPath {
    DivisorClass v0;
    DivisorClass w;
    Rational r_lo;
    Rational r_hi;
};

void validate_path(const SurfaceModel& s, const DivisorPath& path);

// f(r) = sup { s > 0 : (v0 - r w) - s C stays ample } on a surface with
// Eff = Nef; computed as the cone-exit parameter. At the right endpoint the
// sup may be over an empty set (v0 - r w on the cone boundary); the value 0
// there is the continuity extension of the closed form.
QuadNum slice_f(const SurfaceModel& s, const DivisorPath& path, const DivisorClass& c,
                const Rational& r);

// g(r, t) = C.(v0 - r w) - t C^2, exactly.
Rational slice_g(const SurfaceModel& s, const DivisorPath& path, const DivisorClass& c,
                 const Rational& r, const Rational& t);

// f(r) = A0 + A1 r + B sqrt(rad0 + rad1 r + rad2 r^2) on quadratic-cone
// slices with C^2 > 0; recorded so samples can be cross-checked symbolically.
struct ClosedFormF {
    Rational A0, A1, B;
    Rational rad0, rad1, rad2;
    Rational radicand_at(const Rational& r) const {
        return rad0 + rad1 * r + rad2 * r * r;
    }
    QuadNum eval(const Rational& r) const;
};

struct AffineG {
    Rational c0, cr, ct; // g(r,t) = c0 + cr r + ct t
};

struct SliceBody {
    DivisorPath path;
    DivisorClass c;
    std::vector<std::pair<Rational, QuadNum>> f_samples; // ordered by r
    AffineG g;
    std::optional<ClosedFormF> closed_form;
};

SliceBody assemble_slice_body(const SurfaceModel& s, const DivisorPath& path,
                              const DivisorClass& c,
                              std::vector<Rational> samples);

// Exact second differences over an equally spaced sample grid. A nonzero
// window inside one smooth arc of the recorded closed form certifies a
// non-linear boundary; all-zero windows are merely inconclusive.
struct NonPolyhedralityReport {
    bool non_polyhedral = false;
    std::string status; // "NON-POLYHEDRAL-ON-SAMPLE-WINDOW" or "INCONCLUSIVE"
    std::optional<std::array<Rational, 3>> witness;
};

NonPolyhedralityReport nonpolyhedrality_certificate(const SliceBody& body);

// The worked models shipped with the library, pre-validated:
//   exe          the abelian-square surface with form [[0,1,1],[1,0,1],[1,1,0]]
//                and the quadratic cone with witness (1,1,1)
//   fano path    v0 = 9 f1 + 3 f2, w = 9 f1 on [0,1], C = f1 + f2 + diag
//   k3           the quartic with form diag(4,-4,-4), witness (1,0,0)
//   y1           the rank-3 lattice <H, C1, C2> with H^2 = 4, Ci^2 = 0 and all
//                mixed products 4, plus a sample path and flag curve
struct BuiltinModels {
    SurfaceModel exe;
    DivisorPath fano_path;
    DivisorClass fano_c;
    SurfaceModel k3;
    SurfaceModel y1;
    DivisorPath y1_path;
    DivisorClass y1_c;
};

BuiltinModels builtin_models();

} // namespace okb
