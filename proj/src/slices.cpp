#include "okbody/slices.hpp"

#include <algorithm>

#include "okbody/errors.hpp"

namespace okb {

void validate_path(const SurfaceModel& s, const DivisorPath& path) {
    if (path.r_hi < path.r_lo) fail("InvalidModel", "path range is empty");
    // Pseudo-effectivity is convex, so the closed endpoints suffice.
    for (const Rational& r : {path.r_lo, path.r_hi})
        if (!is_pseff(s, vec_sub(path.v0, scaled(path.w, r))))
            fail("NotPseudoEffective",
                 "path leaves the pseudo-effective cone at r = " + r.str());
}

namespace {

void require_eff_equals_nef(const SurfaceModel& s) {
    if (!eff_equals_nef(s))
        fail("HypothesisViolated",
             "slice formulas require a surface with Eff = Nef");
}

} // namespace

QuadNum slice_f(const SurfaceModel& s, const DivisorPath& path, const DivisorClass& c,
                const Rational& r) {
    require_eff_equals_nef(s);
    if (r < path.r_lo || r > path.r_hi)
        fail("InvalidModel", "sample outside the path range");
    const DivisorClass dr = vec_sub(path.v0, scaled(path.w, r));
    if (!is_pseff(s, dr))
        fail("NotPseudoEffective", "path class at r = " + r.str());
    if (is_big(s, dr)) return mu(s, dr, c);
    // Boundary slice: the class already sits on the cone boundary, so the
    // supremum is empty and the continuity value is 0.
    return QuadNum(Rational(0));
}

Rational slice_g(const SurfaceModel& s, const DivisorPath& path, const DivisorClass& c,
                 const Rational& r, const Rational& t) {
    return pair(s, c, vec_sub(path.v0, scaled(path.w, r))) - t * pair(s, c, c);
}

QuadNum ClosedFormF::eval(const Rational& r) const {
    return QuadNum(A0 + A1 * r) + QuadNum(B) * QuadNum::sqrt_of(radicand_at(r));
}

SliceBody assemble_slice_body(const SurfaceModel& s, const DivisorPath& path,
                              const DivisorClass& c,
                              std::vector<Rational> samples) {
    validate_path(s, path);
    require_eff_equals_nef(s);
    SliceBody body;
    body.path = path;
    body.c = c;
    body.g.c0 = pair(s, c, path.v0);
    body.g.cr = -pair(s, c, path.w);
    body.g.ct = -pair(s, c, c);

    const Rational cc = pair(s, c, c);
    if (s.cone.kind == ConeModel::Kind::Quadratic && cc.sign() > 0) {
        // mu(v0 - rw; C) = ((Dr.C) - sqrt((Dr.C)^2 - Dr^2 C^2)) / C^2 with
        // every piece polynomial in r.
        ClosedFormF f;
        const Rational cv0 = pair(s, c, path.v0);
        const Rational cw = pair(s, c, path.w);
        const Rational v00 = pair(s, path.v0, path.v0);
        const Rational v0w = pair(s, path.v0, path.w);
        const Rational ww = pair(s, path.w, path.w);
        f.A0 = cv0 / cc;
        f.A1 = -cw / cc;
        f.B = Rational(-1) / cc;
        f.rad0 = cv0 * cv0 - v00 * cc;
        f.rad1 = Rational(-2) * cv0 * cw + Rational(2) * v0w * cc;
        f.rad2 = cw * cw - ww * cc;
        body.closed_form = f;
    }

    std::sort(samples.begin(), samples.end());
    for (const Rational& r : samples)
        body.f_samples.emplace_back(r, slice_f(s, path, c, r));
    return body;
}

NonPolyhedralityReport nonpolyhedrality_certificate(const SliceBody& body) {
    const auto& fs = body.f_samples;
    if (fs.size() < 3)
        fail("InsufficientSamples", "need at least three equally spaced samples");
    const Rational step = fs[1].first - fs[0].first;
    if (step.sign() <= 0)
        fail("InsufficientSamples", "samples must be strictly increasing");
    for (size_t i = 1; i + 1 < fs.size(); ++i)
        if (!(fs[i + 1].first - fs[i].first == step))
            fail("InsufficientSamples", "samples are not equally spaced");

    NonPolyhedralityReport rep;
    rep.status = "INCONCLUSIVE";
    for (size_t i = 1; i + 1 < fs.size(); ++i) {
        if (body.closed_form) {
            // Restrict windows to one smooth arc of the recorded form.
            bool smooth = true;
            for (size_t k = i - 1; k <= i + 1; ++k)
                smooth = smooth &&
                         body.closed_form->radicand_at(fs[k].first).sign() > 0;
            if (!smooth) continue;
        }
        const QuadNum terms[] = {fs[i - 1].second, -(fs[i].second), -(fs[i].second),
                                 fs[i + 1].second};
        if (sign_of_sum(terms) != 0) {
            rep.non_polyhedral = true;
            rep.status = "NON-POLYHEDRAL-ON-SAMPLE-WINDOW";
            rep.witness = {{fs[i - 1].first, fs[i].first, fs[i + 1].first}};
            break;
        }
    }
    return rep;
}

BuiltinModels builtin_models() {
    BuiltinModels m;

    m.exe.rank = 3;
    m.exe.basis = {"f1", "f2", "diag"};
    m.exe.intersection_matrix = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    m.exe.cone.kind = ConeModel::Kind::Quadratic;
    m.exe.cone.ample = {Rational(1), Rational(1), Rational(1)};

    m.fano_path.v0 = {Rational(9), Rational(3), Rational(0)};
    m.fano_path.w = {Rational(9), Rational(0), Rational(0)};
    m.fano_path.r_lo = Rational(0);
    m.fano_path.r_hi = Rational(1);
    m.fano_c = {Rational(1), Rational(1), Rational(1)};

    m.k3.rank = 3;
    m.k3.basis = {"A", "B", "C"};
    m.k3.intersection_matrix = {{4, 0, 0}, {0, -4, 0}, {0, 0, -4}};
    m.k3.cone.kind = ConeModel::Kind::Quadratic;
    m.k3.cone.ample = {Rational(1), Rational(0), Rational(0)};

    m.y1.rank = 3;
    m.y1.basis = {"H", "C1", "C2"};
    m.y1.intersection_matrix = {{4, 4, 4}, {4, 0, 4}, {4, 4, 0}};
    m.y1.cone.kind = ConeModel::Kind::Quadratic;
    m.y1.cone.ample = {Rational(1), Rational(0), Rational(0)};

    // A sample restriction line on the anticanonical section: ample start
    // (1,1,1), direction the section class 4H - C1 - C2, flag curve H + C1.
    m.y1_path.v0 = {Rational(1), Rational(1), Rational(1)};
    m.y1_path.w = {Rational(4), Rational(-1), Rational(-1)};
    m.y1_path.r_lo = Rational(0);
    m.y1_path.r_hi = Rational(1, 4);
    m.y1_c = {Rational(1), Rational(1), Rational(0)};

    for (const SurfaceModel* s : {&m.exe, &m.k3, &m.y1}) {
        const auto bad = validate_surface(*s);
        if (!bad.empty()) fail("InvalidModel", "builtin model invalid: " + bad.front());
    }
    validate_path(m.exe, m.fano_path);
    validate_path(m.y1, m.y1_path);
    return m;
}

} // namespace okb
