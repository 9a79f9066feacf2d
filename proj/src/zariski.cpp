#include "okbody/zariski.hpp"

#include <algorithm>

#include "okbody/errors.hpp"
#include "okbody/okounkov.hpp"

namespace okb {

namespace {

struct CatalogView {
    std::vector<DivisorClass> classes;
    std::vector<std::string> names;
};

CatalogView catalog(const SurfaceModel& s) {
    CatalogView v;
    for (const auto& c : s.curves) {
        v.classes.push_back(s.curve_class(c));
        v.names.push_back(c.name);
    }
    return v;
}

// Solve N . E_j = rhs_j on the given support; returns the coefficients.
std::vector<Rational> gram_solve(const SurfaceModel& s, const CatalogView& cat,
                                 const std::vector<size_t>& support,
                                 const std::vector<Rational>& rhs) {
    const size_t k = support.size();
    MatQ gram(k, VecQ(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            gram[i][j] = pair(s, cat.classes[support[i]], cat.classes[support[j]]);
    if (!negative_definite(gram))
        fail("GramNotNegativeDefinite",
             "support Gram matrix is not negative definite (incomplete or "
             "inconsistent curve catalog, or input not pseudo-effective)");
    auto sol = solve(std::move(gram), rhs);
    if (!sol)
        fail("GramNotNegativeDefinite", "support Gram matrix is singular");
    return *sol;
}

} // namespace

ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const DivisorClass& d) {
    if (!is_pseff(s, d))
        fail("NotPseudoEffective", "class is outside the pseudo-effective cone");
    const CatalogView cat = catalog(s);
    const size_t n = cat.classes.size();

    std::vector<bool> in_support(n, false);
    for (size_t i = 0; i < n; ++i)
        if (pair(s, d, cat.classes[i]).sign() < 0) in_support[i] = true;

    std::vector<Rational> coeffs;
    DivisorClass p = d;
    for (size_t round = 0; round <= n + 1; ++round) {
        std::vector<size_t> support;
        for (size_t i = 0; i < n; ++i)
            if (in_support[i]) support.push_back(i);

        if (support.empty()) {
            p = d;
            coeffs.clear();
        } else {
            std::vector<Rational> rhs;
            rhs.reserve(support.size());
            for (size_t i : support) rhs.push_back(pair(s, d, cat.classes[i]));
            coeffs = gram_solve(s, cat, support, rhs);
            p = d;
            for (size_t i = 0; i < support.size(); ++i)
                p = vec_sub(p, scaled(cat.classes[support[i]], coeffs[i]));
        }

        bool grew = false;
        for (size_t i = 0; i < n; ++i) {
            if (in_support[i]) continue;
            if (pair(s, p, cat.classes[i]).sign() < 0) {
                in_support[i] = true;
                grew = true;
            }
        }
        if (!grew) {
            for (const auto& c : coeffs)
                if (c.sign() < 0)
                    fail("NefTestFailed",
                         "computed negative part has a negative coefficient; "
                         "the curve catalog is inconsistent");
            if (!is_nef(s, p))
                fail("NefTestFailed",
                     "positive part meets every catalog curve non-negatively "
                     "but fails the cone nef test (incomplete catalog)");
            ZariskiDecomposition out;
            out.P = p;
            std::vector<size_t> support;
            for (size_t i = 0; i < n; ++i)
                if (in_support[i]) support.push_back(i);
            for (size_t i = 0; i < support.size(); ++i)
                if (coeffs[i].sign() > 0) out.N[cat.names[support[i]]] = coeffs[i];
            return out;
        }
    }
    fail("NefTestFailed", "support growth failed to stabilize");
}

namespace {

// N_t = A + t B on a fixed support: A solves A.E_j = D.E_j, B solves
// B.E_j = -C.E_j, so that N_t.E_j = (D - tC).E_j.
struct AffinePiece {
    std::vector<size_t> support;
    std::vector<Rational> a;
    std::vector<Rational> b;
};

AffinePiece solve_piece(const SurfaceModel& s, const CatalogView& cat,
                        const DivisorClass& d, const DivisorClass& c,
                        std::vector<size_t> support) {
    AffinePiece piece;
    piece.support = std::move(support);
    std::vector<Rational> rhs_a, rhs_b;
    for (size_t i : piece.support) {
        rhs_a.push_back(pair(s, d, cat.classes[i]));
        rhs_b.push_back(-pair(s, c, cat.classes[i]));
    }
    piece.a = gram_solve(s, cat, piece.support, rhs_a);
    piece.b = gram_solve(s, cat, piece.support, rhs_b);
    return piece;
}

std::vector<size_t> support_at(const SurfaceModel& s, const CatalogView& cat,
                               const DivisorClass& d, const DivisorClass& c,
                               const Rational& t) {
    const auto zd = zariski_decompose(s, vec_sub(d, scaled(c, t)));
    std::vector<size_t> out;
    for (size_t i = 0; i < cat.names.size(); ++i)
        if (zd.N.count(cat.names[i])) out.push_back(i);
    return out;
}

// Does the affine model reproduce the true decomposition at t, coefficient by
// coefficient (absent entries read as zero)?
bool matches_at(const SurfaceModel& s, const CatalogView& cat,
                const DivisorClass& d, const DivisorClass& c,
                const AffinePiece& piece, const Rational& t) {
    const auto zd = zariski_decompose(s, vec_sub(d, scaled(c, t)));
    std::map<std::string, Rational> predicted;
    for (size_t i = 0; i < piece.support.size(); ++i) {
        const Rational v = piece.a[i] + t * piece.b[i];
        if (v.sign() < 0) return false;
        if (!v.is_zero()) predicted[cat.names[piece.support[i]]] = v;
    }
    return predicted == zd.N;
}

// A rational point strictly inside (lo, hi); hi may be irrational.
Rational rational_inside(const Rational& lo, const QuadNum& hi) {
    if (hi.is_rational()) return (lo + hi.as_rational()) / Rational(2);
    for (unsigned bits = 32;; bits *= 2) {
        Rational hlo, hhi;
        hi.enclosure(bits, hlo, hhi);
        if (hlo > lo) return (lo + hlo) / Rational(2);
        if (bits > (1u << 14))
            throw std::logic_error("rational_inside: empty interval");
    }
}

} // namespace

SegmentWalk segment_walk(const SurfaceModel& s, const DivisorClass& d,
                         const FlagData& flag) {
    if (!is_big(s, d)) fail("NotBig", "walk requires a big divisor class");
    const DivisorClass& c = flag.curve_class;
    if (is_zero_vec(c)) fail("NotBig", "flag curve class is zero");
    if (!is_pseff(s, c))
        fail("NotPseudoEffective", "flag curve class is not pseudo-effective");

    const CatalogView cat = catalog(s);
    const size_t n = cat.classes.size();

    SegmentWalk walk;
    walk.mu = mu(s, d, c);

    const auto z0 = zariski_decompose(s, d);
    walk.nu = Rational(0);
    const int cidx = s.curve_with_class(c);
    if (cidx >= 0) {
        auto it = z0.N.find(cat.names[cidx]);
        if (it != z0.N.end()) walk.nu = it->second;
    }
    if (QuadNum::cross_compare(QuadNum(walk.nu), walk.mu) >= 0)
        fail("NotBig", "nu >= mu: no walk interval");

    Rational t_cur = walk.nu;
    Rational probe = rational_inside(t_cur, walk.mu);
    std::vector<size_t> prev_support;

    while (true) {
        const auto support = support_at(s, cat, d, c, probe);
        if (cidx >= 0 &&
            std::find(support.begin(), support.end(), static_cast<size_t>(cidx)) !=
                support.end())
            fail("NefTestFailed", "flag curve entered the negative part inside "
                                  "the walk interval");
        const AffinePiece piece = solve_piece(s, cat, d, c, support);

        // Next event: a support coefficient hitting zero, or a curve outside
        // the support whose P_t.E line crosses zero with negative slope.
        std::optional<Rational> event;
        auto consider = [&](const Rational& t) {
            if (t > t_cur && (!event || t < *event)) event = t;
        };
        for (size_t i = 0; i < piece.support.size(); ++i)
            if (!piece.b[i].is_zero()) consider(-piece.a[i] / piece.b[i]);
        for (size_t i = 0; i < n; ++i) {
            if (std::find(piece.support.begin(), piece.support.end(), i) !=
                piece.support.end())
                continue;
            // P_t.E_i as an affine function of t
            Rational p0 = pair(s, d, cat.classes[i]);
            Rational p1 = -pair(s, c, cat.classes[i]);
            for (size_t j = 0; j < piece.support.size(); ++j) {
                const Rational ee =
                    pair(s, cat.classes[piece.support[j]], cat.classes[i]);
                p0 -= piece.a[j] * ee;
                p1 -= piece.b[j] * ee;
            }
            if (p1.sign() < 0) consider(-p0 / p1);
        }

        QuadNum piece_end = walk.mu;
        if (event && QuadNum::cross_compare(QuadNum(*event), walk.mu) < 0)
            piece_end = QuadNum(*event);

        // Verify the affine model across the whole candidate interval with
        // catalog-many fresh decompositions; the true chamber structure has at
        // most n+1 pieces, so agreement at these pins plus continuity at t_cur
        // forces the model to be exact on [t_cur, piece_end].
        bool ok = matches_at(s, cat, d, c, piece, t_cur);
        const Rational right = piece_end.is_rational()
                                   ? piece_end.as_rational()
                                   : rational_inside(probe, walk.mu);
        const size_t pins = 2 * n + 4;
        for (size_t k = 1; k <= pins && ok; ++k) {
            const Rational t =
                t_cur + (right - t_cur) * Rational(static_cast<long>(k),
                                                   static_cast<long>(pins));
            ok = matches_at(s, cat, d, c, piece, t);
        }
        if (!ok) {
            // Wrong chamber guess: move the probe closer to t_cur and retry.
            probe = (t_cur + probe) / Rational(2);
            continue;
        }

        if (!prev_support.empty() || !walk.pieces.empty()) {
            // Supports only ever grow along t.
            for (size_t i : prev_support)
                if (std::find(piece.support.begin(), piece.support.end(), i) ==
                    piece.support.end())
                    fail("NefTestFailed",
                         "negative-part support shrank along the walk");
        }

        WalkPiece out;
        out.t_lo = QuadNum(t_cur);
        out.t_hi = piece_end;
        for (size_t i = 0; i < piece.support.size(); ++i) {
            const std::string& name = cat.names[piece.support[i]];
            out.support.insert(name);
            out.A[name] = piece.a[i];
            out.B[name] = piece.b[i];
        }
        walk.pieces.push_back(std::move(out));
        if (walk.pieces.size() > n + 1)
            fail("NefTestFailed", "walk produced more pieces than curves + 1");

        if (QuadNum::cross_compare(piece_end, walk.mu) == 0) break;
        prev_support = piece.support;
        t_cur = piece_end.as_rational();
        probe = rational_inside(t_cur, walk.mu);
    }
    return walk;
}

} // namespace okb
