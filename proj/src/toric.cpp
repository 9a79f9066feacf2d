#include "okbody/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "okbody/errors.hpp"

namespace okb {

namespace {

mpz_class det2(const RayZ2& a, const RayZ2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counterclockwise cycle starting at the lexicographically least vertex.
PolyQ canonical_polyq(PolyQ p) {
    if (p.size() < 2) return p;
    size_t best = 0;
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] < p[best]) best = i;
    std::rotate(p.begin(), p.begin() + static_cast<long>(best), p.end());
    return p;
}

RayZ2 primitive_ray(RayZ2 v) {
    if (v[0] == 0 && v[1] == 0) fail("InvalidFan", "zero ray");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
    return {v[0] / g, v[1] / g};
}

// Counterclockwise angular order starting at the positive x-axis.
bool ccw_less(const RayZ2& a, const RayZ2& b) {
    auto half = [](const RayZ2& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det2(a, b) > 0;
}

bool in_open_first_quadrant(const RayZ2& v) { return v[0] > 0 && v[1] > 0; }

// Self-intersection a_i of the ray divisor: v_{i-1} + v_{i+1} = a_i v_i.
mpz_class neighbor_sum_coefficient(const ToricSurface& t, size_t i) {
    const size_t r = t.rays.size();
    const RayZ2& prev = t.rays[(i + r - 1) % r];
    const RayZ2& next = t.rays[(i + 1) % r];
    const RayZ2& v = t.rays[i];
    const RayZ2 sum{prev[0] + next[0], prev[1] + next[1]};
    mpz_class a;
    if (v[0] != 0) {
        if (sum[0] % v[0] != 0) fail("InvalidFan", "neighbor sum is not a multiple");
        a = sum[0] / v[0];
    } else {
        if (sum[1] % v[1] != 0) fail("InvalidFan", "neighbor sum is not a multiple");
        a = sum[1] / v[1];
    }
    if (sum[0] != a * v[0] || sum[1] != a * v[1])
        fail("InvalidFan", "neighbor sum leaves the ray line");
    return a;
}

} // namespace

void validate_fan(const ToricSurface& t) {
    const size_t r = t.rays.size();
    if (r < 3) fail("InvalidFan", "a complete fan needs at least three rays");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& v : t.rays) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
        if (g != 1) fail("InvalidFan", "ray is not primitive");
        if (!seen.insert({v[0].get_str(), v[1].get_str()}).second)
            fail("InvalidFan", "duplicate ray");
    }
    for (size_t i = 0; i + 1 < r; ++i)
        if (!ccw_less(t.rays[i], t.rays[i + 1]))
            fail("InvalidFan", "rays are not in counterclockwise order");
    mpz_class square_sum = 0;
    for (size_t i = 0; i < r; ++i) {
        if (det2(t.rays[i], t.rays[(i + 1) % r]) != 1)
            fail("InvalidFan", "consecutive rays are not unimodular (det != 1)");
        square_sum -= neighbor_sum_coefficient(t, i);
    }
    if (square_sum != 12 - 3 * static_cast<long>(r))
        fail("InvalidFan", "sum of D_i^2 is not 12 - 3r");
}

PolyQ polytope_of_divisor(const ToricSurface& t, const std::vector<Rational>& a) {
    const size_t r = t.rays.size();
    if (a.size() != r) fail("DimensionMismatch", "one coefficient per ray");
    auto value = [&](size_t i, const Rational& x, const Rational& y) {
        return Rational(t.rays[i][0]) * x + Rational(t.rays[i][1]) * y + a[i];
    };
    std::vector<std::pair<Rational, Rational>> pts;
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = i + 1; j < r; ++j) {
            const Rational dij(det2(t.rays[i], t.rays[j]));
            if (dij.is_zero()) continue;
            // <u,v_i> = -a_i, <u,v_j> = -a_j
            const Rational x =
                (-a[i] * Rational(t.rays[j][1]) + a[j] * Rational(t.rays[i][1])) / dij;
            const Rational y =
                (-a[j] * Rational(t.rays[i][0]) + a[i] * Rational(t.rays[j][0])) / dij;
            bool inside = true;
            for (size_t k = 0; k < r && inside; ++k)
                inside = value(k, x, y).sign() >= 0;
            if (inside) pts.emplace_back(x, y);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    // Order counterclockwise around the centroid.
    Rational cx(0), cy(0);
    for (const auto& p : pts) {
        cx += p.first;
        cy += p.second;
    }
    const Rational m(static_cast<long>(pts.size()));
    cx /= m;
    cy /= m;
    auto angle_half = [&](const std::pair<Rational, Rational>& p) {
        const Rational dx = p.first - cx, dy = p.second - cy;
        return (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
        const int hp = angle_half(p), hq = angle_half(q);
        if (hp != hq) return hp < hq;
        const Rational cr = (p.first - cx) * (q.second - cy) -
                            (p.second - cy) * (q.first - cx);
        return cr.sign() > 0;
    });
    return canonical_polyq(std::move(pts));
}

ToricModel toric_surface_model(const ToricSurface& t) {
    validate_fan(t);
    const size_t r = t.rays.size();
    const int rho = static_cast<int>(r) - 2;

    ToricModel tm;
    // Drop (1,0) and (0,1) when both are rays, otherwise the first adjacent
    // pair; the dropped pair must be unimodular so the relations solve for it.
    int i1 = -1, i2 = -1;
    for (size_t i = 0; i < r; ++i) {
        if (t.rays[i] == RayZ2{1, 0}) i1 = static_cast<int>(i);
        if (t.rays[i] == RayZ2{0, 1}) i2 = static_cast<int>(i);
    }
    if (i1 < 0 || i2 < 0) {
        i1 = 0;
        i2 = 1;
    }
    tm.dropped = {i1, i2};

    // Relations sum_i <u, v_i> D_i ~ 0 for u = e1*, e2* express the dropped
    // classes over the others: M [D_i1, D_i2]^T = -sum_k v_k D_k.
    const RayZ2& w1 = t.rays[i1];
    const RayZ2& w2 = t.rays[i2];
    const mpz_class dm = det2(w1, w2);
    if (dm == 0) fail("InvalidFan", "dropped rays are collinear");
    // inverse of [[w1x, w2x], [w1y, w2y]] scaled by 1/dm
    auto solve_drop = [&](const mpz_class& rx, const mpz_class& ry) {
        // returns coefficients (c1, c2) with c1 w1 + c2 w2 = (rx, ry)
        Rational c1 = Rational(rx * w2[1] - ry * w2[0]) / Rational(dm);
        Rational c2 = Rational(ry * w1[0] - rx * w1[1]) / Rational(dm);
        return std::pair<Rational, Rational>(c1, c2);
    };

    std::vector<int> basis_pos(r, -1);
    int pos = 0;
    for (size_t k = 0; k < r; ++k)
        if (static_cast<int>(k) != i1 && static_cast<int>(k) != i2)
            basis_pos[k] = pos++;

    tm.ray_classes.assign(r, VecQ(rho, Rational(0)));
    for (size_t k = 0; k < r; ++k) {
        if (basis_pos[k] >= 0) {
            tm.ray_classes[k][basis_pos[k]] = Rational(1);
        } else {
            // D_k is dropped: express it from the two relations.
            for (size_t m = 0; m < r; ++m) {
                if (basis_pos[m] < 0) continue;
                auto [c1, c2] = solve_drop(t.rays[m][0], t.rays[m][1]);
                const Rational coeff =
                    (static_cast<int>(k) == i1) ? c1 : c2;
                tm.ray_classes[k][basis_pos[m]] = -coeff;
            }
        }
    }

    // Intersection numbers of the ray divisors.
    auto ray_pair = [&](size_t i, size_t j) -> mpz_class {
        if (i == j) return -neighbor_sum_coefficient(t, i);
        const size_t d = (i > j) ? i - j : j - i;
        if (d == 1 || d == r - 1) return 1;
        return 0;
    };

    SurfaceModel& s = tm.model;
    s.rank = rho;
    tm.ray_names.clear();
    for (size_t k = 0; k < r; ++k) tm.ray_names.push_back("D" + std::to_string(k));
    for (size_t k = 0; k < r; ++k)
        if (basis_pos[k] >= 0) s.basis.push_back(tm.ray_names[k]);

    s.intersection_matrix.assign(rho, std::vector<mpz_class>(rho));
    {
        std::vector<size_t> basis_ray;
        for (size_t k = 0; k < r; ++k)
            if (basis_pos[k] >= 0) basis_ray.push_back(k);
        for (int i = 0; i < rho; ++i)
            for (int j = 0; j < rho; ++j)
                s.intersection_matrix[i][j] = ray_pair(basis_ray[i], basis_ray[j]);
    }

    // Curve catalog: the rays with negative self-intersection.
    for (size_t k = 0; k < r; ++k) {
        const mpz_class sq = ray_pair(k, k);
        if (sq >= 0) continue;
        CurveEntry e;
        e.name = tm.ray_names[k];
        e.self_int = sq;
        const VecQ prim = primitive(tm.ray_classes[k]);
        for (const auto& x : prim) e.cls.push_back(x.num());
        s.curves.push_back(std::move(e));
    }

    // Cone data. Nef: v . D_i >= 0 for every ray. Effective: generated by the
    // ray classes; its facets come from the positive circuits of the ray
    // configuration (a covector on the class lattice is the same thing as a
    // coefficient vector c with sum c_i v_i = 0, non-negative on a face).
    ConeModel& cone = s.cone;
    cone.kind = ConeModel::Kind::Polyhedral;
    for (size_t k = 0; k < r; ++k)
        cone.eff_generators.push_back(primitive(tm.ray_classes[k]));

    {
        MatQ q(rho, VecQ(rho));
        for (int i = 0; i < rho; ++i)
            for (int j = 0; j < rho; ++j)
                q[i][j] = Rational(s.intersection_matrix[i][j]);
        std::set<std::vector<std::string>> seen;
        for (size_t k = 0; k < r; ++k) {
            VecQ f = mat_vec(q, primitive(tm.ray_classes[k]));
            if (is_zero_vec(f)) continue;
            f = primitive(f);
            std::vector<std::string> key;
            for (const auto& x : f) key.push_back(x.str());
            if (seen.insert(key).second) cone.nef_facets.push_back(f);
        }
    }

    {
        // Positive circuits with support <= 3: a facet is tight on at least
        // rho - 1 = r - 3 classes, so at most 3 coefficients are positive.
        // Conversely every positive pair/triple circuit is a facet: a class
        // dependency avoiding the support would need a character orthogonal
        // to the support rays, which positively span the plane.
        std::set<std::vector<std::string>> seen;
        auto push_circuit = [&](std::vector<std::pair<size_t, mpz_class>> entries) {
            VecQ f(rho, Rational(0));
            for (auto& [k, c] : entries) {
                // psi(class of a basis ray) is just the circuit coefficient;
                // values at dropped rays are implied, since the circuit kills
                // the character relations.
                if (basis_pos[k] >= 0) f[basis_pos[k]] = Rational(c);
            }
            if (is_zero_vec(f)) return;
            f = primitive(f);
            std::vector<std::string> key;
            for (const auto& x : f) key.push_back(x.str());
            if (seen.insert(key).second) cone.eff_facets.push_back(f);
        };
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j) {
                if (det2(t.rays[i], t.rays[j]) != 0) continue;
                // antipodal pair: v_i + c v_j = 0 with c > 0
                push_circuit({{i, 1}, {j, 1}});
            }
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j)
                for (size_t k = j + 1; k < r; ++k) {
                    mpz_class ci = det2(t.rays[j], t.rays[k]);
                    mpz_class cj = det2(t.rays[k], t.rays[i]);
                    mpz_class ck = det2(t.rays[i], t.rays[j]);
                    if (ci == 0 || cj == 0 || ck == 0) continue;
                    if (ci < 0) { ci = -ci; cj = -cj; ck = -ck; }
                    if (cj <= 0 || ck <= 0) continue;
                    push_circuit({{i, ci}, {j, cj}, {k, ck}});
                }
    }
    return tm;
}

DivisorClass toric_divisor_class(const ToricModel& tm, const std::vector<Rational>& a) {
    if (a.size() != tm.ray_classes.size())
        fail("DimensionMismatch", "one coefficient per ray");
    DivisorClass d(tm.model.rank, Rational(0));
    for (size_t k = 0; k < a.size(); ++k)
        d = vec_add(d, scaled(tm.ray_classes[k], a[k]));
    return d;
}

FlagData toric_flag(const ToricModel& tm, int i1, int i2) {
    FlagData flag;
    flag.curve_class = tm.ray_classes[i1];
    const std::string& name2 = tm.ray_names[i2];
    if (tm.model.find_curve(name2)) flag.multiplicities[name2] = 1;
    return flag;
}

PolyQ okounkov_via_psi(const ToricSurface& t, const std::vector<Rational>& a,
                       int i1, int i2) {
    const size_t r = t.rays.size();
    const bool adjacent = (static_cast<size_t>((i1 + 1) % r) == static_cast<size_t>(i2)) ||
                          (static_cast<size_t>((i2 + 1) % r) == static_cast<size_t>(i1));
    if (!adjacent || det2(t.rays[i1], t.rays[i2]) * det2(t.rays[i1], t.rays[i2]) != 1)
        fail("NonAdjacentFlag", "flag rays must be adjacent and unimodular");
    const PolyQ p = polytope_of_divisor(t, a);
    PolyQ out;
    out.reserve(p.size());
    for (const auto& [x, y] : p)
        out.emplace_back(Rational(t.rays[i1][0]) * x + Rational(t.rays[i1][1]) * y,
                         Rational(t.rays[i2][0]) * x + Rational(t.rays[i2][1]) * y);
    // psi is unimodular on the plane, but may reverse orientation.
    if (out.size() >= 3) {
        Rational twice(0);
        for (size_t i = 0; i < out.size(); ++i) {
            const auto& pp = out[i];
            const auto& qq = out[(i + 1) % out.size()];
            twice += pp.first * qq.second - qq.first * pp.second;
        }
        if (twice.sign() < 0) std::reverse(out.begin() + 1, out.end());
    }
    return canonical_polyq(std::move(out));
}

ToricSurface smooth_complete_fan(std::vector<RayZ2> rays) {
    for (auto& v : rays) v = primitive_ray(v);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (std::find(rays.begin(), rays.end(), RayZ2{1, 0}) == rays.end() ||
        std::find(rays.begin(), rays.end(), RayZ2{0, 1}) == rays.end())
        fail("MissingAxisRays", "(1,0) and (0,1) must be among the rays");
    std::sort(rays.begin(), rays.end(), ccw_less);

    // Complete: split every reflex gap (angle >= pi) with a rotated ray.
    for (size_t i = 0; i < rays.size();) {
        const RayZ2 v = rays[i];
        const RayZ2 w = rays[(i + 1) % rays.size()];
        if (det2(v, w) <= 0) {
            RayZ2 u{-v[1], v[0]};
            rays.insert(rays.begin() + static_cast<long>(i) + 1, u);
        } else {
            ++i;
        }
    }

    // Smooth: subdivide each gap with determinant > 1 by the minimal chain.
    for (size_t i = 0; i < rays.size();) {
        const size_t j = (i + 1) % rays.size();
        const RayZ2 v = rays[i];
        const RayZ2 w = rays[j];
        const mpz_class n = det2(v, w);
        if (n <= 0) fail("InvalidFan", "completion left a reflex gap");
        if (n == 1) {
            ++i;
            continue;
        }
        // Change basis so v = (1,0): M = [[p, q], [-v_y, v_x]] with
        // p v_x + q v_y = 1; then w maps to (a, n) and the next ray of the
        // minimal subdivision is (ceil((a+1)/n), 1) pulled back through M.
        mpz_class p, q, g;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), v[0].get_mpz_t(),
                   v[1].get_mpz_t());
        const mpz_class a = p * w[0] + q * w[1];
        mpz_class qq;
        mpz_cdiv_q(qq.get_mpz_t(), mpz_class(a + 1).get_mpz_t(), n.get_mpz_t());
        // inverse of M = [[p, q], [-v_y, v_x]] is [[v_x, -q], [v_y, p]]
        RayZ2 u{v[0] * qq - q, v[1] * qq + p};
        if (in_open_first_quadrant(u))
            fail("InvalidFan", "subdivision tried to enter the open first quadrant");
        rays.insert(rays.begin() + static_cast<long>(i) + 1, u);
    }

    ToricSurface t{std::move(rays)};
    validate_fan(t);
    return t;
}

VertexList to_vertex_list(const PolyQ& p) {
    VertexList out;
    out.reserve(p.size());
    for (const auto& [x, y] : p) out.emplace_back(QuadNum(x), QuadNum(y));
    return out;
}

Realization realize_polygon(const PolyQ& poly) {
    const auto rep = validate_theorem_b(to_vertex_list(poly));
    if (!rep.pass)
        fail("InvalidPolygon", rep.violations.empty() ? "fails the polygon shape check"
                                                      : rep.violations.front());

    // Translate so the polygon touches both axes inside the positive quadrant.
    Rational tmin = poly.front().first, ymin = poly.front().second;
    for (const auto& [x, y] : poly) {
        tmin = std::min(tmin, x);
        ymin = std::min(ymin, y);
    }
    PolyQ moved;
    moved.reserve(poly.size());
    for (const auto& [x, y] : poly) moved.emplace_back(x - tmin, y - ymin);
    // Normalize counterclockwise.
    {
        Rational twice(0);
        for (size_t i = 0; i < moved.size(); ++i) {
            const auto& pp = moved[i];
            const auto& qq = moved[(i + 1) % moved.size()];
            twice += pp.first * qq.second - qq.first * pp.second;
        }
        if (twice.sign() < 0) std::reverse(moved.begin() + 1, moved.end());
    }

    // Primitive inward normals and support constants of the edges.
    std::vector<RayZ2> normals;
    std::map<std::pair<std::string, std::string>, Rational> support;
    auto key_of = [](const RayZ2& v) {
        return std::make_pair(v[0].get_str(), v[1].get_str());
    };
    for (size_t i = 0; i < moved.size(); ++i) {
        const auto& p = moved[i];
        const auto& q = moved[(i + 1) % moved.size()];
        const Rational dx = q.first - p.first, dy = q.second - p.second;
        const VecQ n = primitive({-dy, dx}); // interior lies left of p->q
        RayZ2 ni{n[0].num(), n[1].num()};
        normals.push_back(ni);
        support[key_of(ni)] = -(n[0] * p.first + n[1] * p.second);
    }
    for (const RayZ2 axis : {RayZ2{1, 0}, RayZ2{0, 1}}) {
        if (std::find(normals.begin(), normals.end(), axis) == normals.end()) {
            normals.push_back(axis);
            support[key_of(axis)] = Rational(0);
        }
    }

    ToricSurface fan = smooth_complete_fan(normals);

    Realization out;
    out.shift_t = -tmin;
    out.shift_y = -ymin;
    out.divisor.surface = fan;
    for (size_t k = 0; k < fan.rays.size(); ++k) {
        const auto it = support.find(key_of(fan.rays[k]));
        if (it != support.end()) {
            out.divisor.a.push_back(it->second);
        } else {
            // support value max(-<u, v>) over the polygon keeps P(D) = poly
            Rational best = -(Rational(fan.rays[k][0]) * moved[0].first +
                              Rational(fan.rays[k][1]) * moved[0].second);
            for (const auto& [x, y] : moved)
                best = std::max(best, -(Rational(fan.rays[k][0]) * x +
                                        Rational(fan.rays[k][1]) * y));
            out.divisor.a.push_back(best);
        }
        if (fan.rays[k] == RayZ2{1, 0}) out.flag_i1 = static_cast<int>(k);
        if (fan.rays[k] == RayZ2{0, 1}) out.flag_i2 = static_cast<int>(k);
    }
    return out;
}

} // namespace okb
