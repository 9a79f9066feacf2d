#include "okbody/okounkov.hpp"

#include <algorithm>

#include "okbody/errors.hpp"

namespace okb {

namespace {

int cmp(const QuadNum& x, const QuadNum& y) { return QuadNum::cross_compare(x, y); }

int cmp_points(const PointQ2& p, const PointQ2& q) {
    const int ct = cmp(p.first, q.first);
    if (ct != 0) return ct;
    return cmp(p.second, q.second);
}

} // namespace

QuadNum mu(const SurfaceModel& s, const DivisorClass& d, const DivisorClass& c) {
    if (is_zero_vec(c)) fail("Unbounded", "mu along the zero class");
    if (!is_big(s, d)) fail("NotBig", "mu requires a big divisor class");

    if (s.cone.kind == ConeModel::Kind::Polyhedral) {
        std::optional<Rational> best;
        for (const auto& f : s.cone.eff_facets) {
            const Rational fc = dot(f, c);
            if (fc.sign() <= 0) continue;
            const Rational ratio = dot(f, d) / fc;
            if (!best || ratio < *best) best = ratio;
        }
        if (!best)
            fail("Unbounded", "no effective facet is positive on the flag class");
        return QuadNum(*best);
    }

    // Quadratic cone: exit of D - tC from { v.v >= 0 } cut by { v.h >= 0 }.
    const Rational cc = pair(s, c, c);
    const Rational dc = pair(s, d, c);
    const Rational dd = pair(s, d, d);
    std::optional<QuadNum> exit;
    for (const auto& root : quadratic_roots(cc, Rational(-2) * dc, dd))
        if (root.sign() > 0) { exit = root; break; }
    const Rational ch = pair(s, c, s.cone.ample);
    if (ch.sign() > 0) {
        const QuadNum wall(pair(s, d, s.cone.ample) / ch);
        if (!exit || cmp(wall, *exit) < 0) exit = wall;
    }
    if (!exit) fail("Unbounded", "D - tC stays big for every t");
    return *exit;
}

namespace {

struct AffineFn {
    Rational c0;
    Rational c1;
    QuadNum at(const QuadNum& t) const { return QuadNum(c0) + QuadNum(c1) * t; }
};

} // namespace

OkounkovPolygon okounkov_polygon(const SurfaceModel& s, const DivisorClass& d,
                                 const FlagData& flag) {
    if (auto bad = validate_flag(s, flag); !bad.empty())
        fail("InvalidFlag", bad.front());

    const SegmentWalk walk = segment_walk(s, d, flag);
    const DivisorClass& c = flag.curve_class;
    const Rational dc = pair(s, d, c);
    const Rational cc = pair(s, c, c);

    // Per piece, alpha(t) = sum m_E (A[E] + t B[E]) and beta = alpha + P_t.C.
    struct Piece {
        QuadNum lo, hi;
        AffineFn alpha, beta;
    };
    std::vector<Piece> pieces;
    for (const auto& wp : walk.pieces) {
        AffineFn a{Rational(0), Rational(0)};
        Rational pc0 = dc, pc1 = -cc;
        for (const auto& [name, coeff] : wp.A) {
            const CurveEntry* e = s.find_curve(name);
            const Rational ec = pair(s, s.curve_class(*e), c);
            const Rational b = wp.B.at(name);
            pc0 -= coeff * ec;
            pc1 -= b * ec;
            auto it = flag.multiplicities.find(name);
            if (it != flag.multiplicities.end() && it->second != 0) {
                a.c0 += coeff * Rational(it->second);
                a.c1 += b * Rational(it->second);
            }
        }
        Piece p;
        p.lo = wp.t_lo;
        p.hi = wp.t_hi;
        p.alpha = a;
        p.beta = AffineFn{a.c0 + pc0, a.c1 + pc1};
        if (!pieces.empty() && pieces.back().alpha.c0 == a.c0 &&
            pieces.back().alpha.c1 == a.c1 && pieces.back().beta.c0 == p.beta.c0 &&
            pieces.back().beta.c1 == p.beta.c1) {
            pieces.back().hi = p.hi; // collinear on both boundaries
        } else {
            pieces.push_back(std::move(p));
        }
    }

    OkounkovPolygon poly;
    poly.nu = walk.nu;
    poly.mu = walk.mu;
    for (const auto& p : pieces) {
        poly.breakpoints.push_back(p.lo);
        poly.alpha_values.push_back(p.alpha.at(p.lo));
        poly.beta_values.push_back(p.beta.at(p.lo));
        poly.alpha_slopes.push_back(p.alpha.c1);
        poly.beta_slopes.push_back(p.beta.c1);
    }
    const Piece& last = pieces.back();
    poly.breakpoints.push_back(last.hi);
    poly.alpha_values.push_back(last.alpha.at(last.hi));
    poly.beta_values.push_back(last.beta.at(last.hi));

    // Vertices, counterclockwise from (nu, alpha(nu)): along alpha to mu, up
    // the right edge if beta(mu) > alpha(mu), back along beta, closing along
    // t = nu if beta(nu) > alpha(nu).
    VertexList verts;
    verts.emplace_back(pieces.front().lo, pieces.front().alpha.at(pieces.front().lo));
    for (size_t i = 1; i < pieces.size(); ++i)
        if (!(pieces[i - 1].alpha.c1 == pieces[i].alpha.c1))
            verts.emplace_back(pieces[i].lo, pieces[i].alpha.at(pieces[i].lo));
    verts.emplace_back(last.hi, last.alpha.at(last.hi));
    if (cmp(last.beta.at(last.hi), last.alpha.at(last.hi)) > 0)
        verts.emplace_back(last.hi, last.beta.at(last.hi));
    for (size_t i = pieces.size(); i-- > 1;)
        if (!(pieces[i - 1].beta.c1 == pieces[i].beta.c1))
            verts.emplace_back(pieces[i].lo, pieces[i].beta.at(pieces[i].lo));
    if (cmp(pieces.front().beta.at(pieces.front().lo),
            pieces.front().alpha.at(pieces.front().lo)) > 0)
        verts.emplace_back(pieces.front().lo, pieces.front().beta.at(pieces.front().lo));
    poly.vertices = std::move(verts);
    return poly;
}

namespace {

QuadNum cross(const PointQ2& o, const PointQ2& a, const PointQ2& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

int orient(const PointQ2& o, const PointQ2& a, const PointQ2& b) {
    return cross(o, a, b).sign();
}

bool on_segment(const PointQ2& p, const PointQ2& a, const PointQ2& b) {
    // p collinear with ab assumed; is p within the bounding box?
    auto within = [](const QuadNum& x, const QuadNum& lo, const QuadNum& hi) {
        return cmp(x, lo) >= 0 && cmp(x, hi) <= 0;
    };
    QuadNum xlo = a.first, xhi = b.first;
    if (cmp(xlo, xhi) > 0) std::swap(xlo, xhi);
    QuadNum ylo = a.second, yhi = b.second;
    if (cmp(ylo, yhi) > 0) std::swap(ylo, yhi);
    return within(p.first, xlo, xhi) && within(p.second, ylo, yhi);
}

bool segments_cross(const PointQ2& a, const PointQ2& b, const PointQ2& c,
                    const PointQ2& d) {
    const int d1 = orient(c, d, a), d2 = orient(c, d, b);
    const int d3 = orient(a, b, c), d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(a, c, d)) return true;
    if (d2 == 0 && on_segment(b, c, d)) return true;
    if (d3 == 0 && on_segment(c, a, b)) return true;
    if (d4 == 0 && on_segment(d, a, b)) return true;
    return false;
}

VertexList cleaned_cycle(VertexList v) {
    // Drop consecutive duplicates, including the wrap-around one.
    VertexList out;
    for (const auto& p : v)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

size_t lexmin_index(const VertexList& v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (cmp_points(v[i], v[best]) < 0) best = i;
    return best;
}

VertexList canonical_cycle(const VertexList& raw) {
    VertexList v = cleaned_cycle(raw);
    if (v.size() >= 3 && shoelace_twice_area(v).sign() < 0)
        std::reverse(v.begin() + 1, v.end());
    const size_t k = lexmin_index(v);
    VertexList out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.push_back(v[(k + i) % v.size()]);
    return out;
}

} // namespace

QuadNum shoelace_twice_area(const VertexList& vertices) {
    QuadNum sum;
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& p = vertices[i];
        const auto& q = vertices[(i + 1) % n];
        sum += p.first * q.second - q.first * p.second;
    }
    return sum;
}

TheoremBReport validate_theorem_b(const VertexList& raw, bool strict_alpha) {
    VertexList v = cleaned_cycle(raw);
    if (v.size() < 3) fail("NotAPolygon", "fewer than three distinct vertices");
    if (shoelace_twice_area(v).sign() == 0)
        fail("NotAPolygon", "vertex cycle has zero area");
    if (shoelace_twice_area(v).sign() < 0)
        std::reverse(v.begin() + 1, v.end()); // accept clockwise input

    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (sharing an endpoint)
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                fail("NotAPolygon", "self-intersecting vertex cycle");
        }
    }

    TheoremBReport rep;
    auto flag = [&](const std::string& m) {
        rep.pass = false;
        rep.violations.push_back(m);
    };

    // Rotate so the walk starts at the bottom of the left edge.
    {
        const size_t k = lexmin_index(v);
        std::rotate(v.begin(), v.begin() + static_cast<long>(k), v.end());
    }

    // Lower chain while t strictly increases.
    size_t lower_end = 0;
    while (lower_end + 1 < n && cmp(v[lower_end + 1].first, v[lower_end].first) > 0)
        ++lower_end;
    for (size_t i = lower_end + 1; i < n; ++i)
        if (cmp(v[i].first, v[lower_end].first) > 0) {
            flag("lower boundary is not monotone in t");
            return rep;
        }
    size_t upper_start = lower_end;
    if (lower_end + 1 < n && cmp(v[lower_end + 1].first, v[lower_end].first) == 0) {
        if (cmp(v[lower_end + 1].second, v[lower_end].second) <= 0) {
            flag("right edge is not oriented upward");
            return rep;
        }
        upper_start = lower_end + 1;
    }
    // Upper chain must come back with t strictly decreasing.
    for (size_t i = upper_start; i + 1 < n; ++i)
        if (cmp(v[i + 1].first, v[i].first) >= 0) {
            flag("upper boundary is not monotone in t");
            return rep;
        }

    std::vector<PointQ2> alpha(v.begin(), v.begin() + static_cast<long>(lower_end) + 1);
    std::vector<PointQ2> beta(v.begin() + static_cast<long>(upper_start), v.end());
    std::reverse(beta.begin(), beta.end());
    if (cmp(beta.empty() ? v[0].first : beta.front().first, v[0].first) > 0)
        beta.insert(beta.begin(), v[0]); // polygon closes at a point on the left

    auto chain_slopes = [&](const std::vector<PointQ2>& chain,
                            std::vector<Rational>& out) -> bool {
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            const QuadNum s =
                (chain[i + 1].second - chain[i].second) /
                (chain[i + 1].first - chain[i].first);
            if (!s.is_rational()) {
                flag("boundary slope is irrational");
                return false;
            }
            out.push_back(s.as_rational());
        }
        return true;
    };
    std::vector<Rational> sa, sb;
    if (!chain_slopes(alpha, sa) || !chain_slopes(beta, sb)) return rep;

    for (size_t i = 0; i < sa.size(); ++i) {
        if (sa[i].sign() < 0) {
            flag("alpha decreases");
            break;
        }
        if (strict_alpha && sa[i].sign() == 0) {
            flag("alpha is not strictly increasing (strict lint)");
            break;
        }
    }
    for (size_t i = 0; i + 1 < sa.size(); ++i)
        if (sa[i + 1] < sa[i]) {
            flag("alpha is not convex");
            break;
        }
    for (size_t i = 0; i + 1 < sb.size(); ++i)
        if (sb[i + 1] > sb[i]) {
            flag("beta is not concave");
            break;
        }

    // After translating (t_min, min alpha) to the origin the region must sit
    // in the closed positive quadrant.
    const QuadNum t0 = v[0].first;
    QuadNum ymin = alpha.front().second;
    for (const auto& p : alpha)
        if (cmp(p.second, ymin) < 0) ymin = p.second;
    for (const auto& p : v) {
        if (cmp(p.first - t0, QuadNum()) < 0 || cmp(p.second - ymin, QuadNum()) < 0) {
            flag("region leaves the positive quadrant after translation");
            break;
        }
    }
    return rep;
}

TheoremBReport validate_theorem_b(const OkounkovPolygon& poly, bool strict_alpha) {
    return validate_theorem_b(poly.vertices, strict_alpha);
}

VolumeReport volume_checks(const SurfaceModel& s, const DivisorClass& d,
                           const OkounkovPolygon& poly) {
    VolumeReport rep;
    const auto zd = zariski_decompose(s, d);
    rep.p_squared = pair(s, zd.P, zd.P);
    rep.twice_area = shoelace_twice_area(poly.vertices);
    rep.pass = cmp(rep.twice_area, QuadNum(rep.p_squared)) == 0;
    return rep;
}

MuCertificate mu_quadratic_certificate(const SurfaceModel& s, const DivisorClass& d,
                                       const DivisorClass& c) {
    const QuadNum m = mu(s, d, c);
    MuCertificate cert;
    if (s.cone.kind == ConeModel::Kind::Polyhedral) {
        // The minimizing facet yields the linear certificate (0, f(C), -f(D)).
        for (const auto& f : s.cone.eff_facets) {
            const Rational fc = dot(f, c);
            if (fc.sign() <= 0) continue;
            if (dot(f, d) / fc == m.as_rational()) {
                cert = {Rational(0), fc, -dot(f, d)};
                break;
            }
        }
    } else {
        cert = {pair(s, c, c), Rational(-2) * pair(s, d, c), pair(s, d, d)};
        // mu may be the half-space wall rather than a root of q(D - tC).
        const QuadNum value =
            QuadNum(cert.A) * m * m + QuadNum(cert.B) * m + QuadNum(cert.C);
        if (value.sign() != 0) {
            const Rational ch = pair(s, c, s.cone.ample);
            cert = {Rational(0), ch, -pair(s, d, s.cone.ample)};
        }
    }
    const QuadNum check =
        QuadNum(cert.A) * m * m + QuadNum(cert.B) * m + QuadNum(cert.C);
    if (check.sign() != 0)
        fail("Unbounded", "internal: certificate does not annihilate mu");
    return cert;
}

QuadNum seshadri_as_mu(const SurfaceModel& s_blowup, const DivisorClass& d_pullback,
                       const DivisorClass& exceptional) {
    return mu(s_blowup, d_pullback, exceptional);
}

VertexList translated(const VertexList& vertices, const QuadNum& dt, const QuadNum& dy) {
    VertexList out;
    out.reserve(vertices.size());
    for (const auto& p : vertices) out.emplace_back(p.first + dt, p.second + dy);
    return out;
}

VertexList scaled_polygon(const VertexList& vertices, const Rational& lambda) {
    VertexList out;
    out.reserve(vertices.size());
    for (const auto& p : vertices)
        out.emplace_back(p.first * QuadNum(lambda), p.second * QuadNum(lambda));
    return out;
}

bool polygons_equal(const VertexList& a, const VertexList& b) {
    const VertexList ca = canonical_cycle(a), cb = canonical_cycle(b);
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

bool polygons_equal_up_to_translation(const VertexList& a, const VertexList& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    const VertexList ca = canonical_cycle(a), cb = canonical_cycle(b);
    if (ca.size() != cb.size()) return false;
    const QuadNum dt = cb[0].first - ca[0].first;
    const QuadNum dy = cb[0].second - ca[0].second;
    return polygons_equal(translated(ca, dt, dy), cb);
}

} // namespace okb
