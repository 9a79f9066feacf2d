#include "verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "okbody/errors.hpp"
#include "okbody/slices.hpp"
#include "okbody/toric.hpp"
#include "oracles.hpp"

namespace okb::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Failure {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

CheckResult run_check(const std::string& name,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.what;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

QuadNum fano_f_closed_form(const Rational& r) {
    // 4 - 3r - sqrt(9 r^2 - 15 r + 7)
    const Rational rad = Rational(9) * r * r - Rational(15) * r + Rational(7);
    return QuadNum(Rational(4) - Rational(3) * r) - QuadNum::sqrt_of(rad);
}

std::string fano_exactness() {
    const auto start = Clock::now();
    const auto m = builtin_models();
    for (long k = 0; k <= 20; ++k) {
        const Rational r(k, 20);
        const QuadNum f = slice_f(m.exe, m.fano_path, m.fano_c, r);
        expect(f == fano_f_closed_form(r),
               "f(" + r.str() + ") = " + f.str() + " off the closed form");
    }
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j) {
            const Rational r(i, 4), t(j, 4);
            const Rational g = slice_g(m.exe, m.fano_path, m.fano_c, r, t);
            expect(g == Rational(24) - Rational(18) * r - Rational(6) * t,
                   "g(" + r.str() + "," + t.str() + ") = " + g.str());
        }
    const double dt = seconds_since(start);
    expect(dt < 1.0, "runtime budget exceeded");
    std::ostringstream os;
    os << "21 f-samples and 5x5 g-grid exact in " << dt << "s";
    return os.str();
}

std::string nonpolyhedrality() {
    const auto m = builtin_models();
    std::vector<Rational> grid;
    for (long k = 0; k <= 20; ++k) grid.emplace_back(k, 20);
    const SliceBody fano = assemble_slice_body(m.exe, m.fano_path, m.fano_c, grid);
    const auto cert = nonpolyhedrality_certificate(fano);
    expect(cert.non_polyhedral && cert.status == "NON-POLYHEDRAL-ON-SAMPLE-WINDOW",
           "Fano body certificate came back " + cert.status);
    expect(cert.witness.has_value(), "certificate carries no witness");

    // The coarse window {0, 1/2, 1} has second difference exactly -1.
    const QuadNum d2 = fano_f_closed_form(Rational(0)) -
                       QuadNum(Rational(2)) * fano_f_closed_form(Rational(1, 2)) +
                       fano_f_closed_form(Rational(1));
    expect(d2 == QuadNum(Rational(-1)), "coarse second difference is " + d2.str());

    // Control: a product-of-lines slice has linear f and stays inconclusive.
    const SurfaceModel quadric = oracle::fixture_p1p1();
    DivisorPath path;
    path.v0 = {Rational(3), Rational(2)};
    path.w = {Rational(1), Rational(1)};
    path.r_lo = Rational(0);
    path.r_hi = Rational(1);
    const DivisorClass c = {Rational(1), Rational(1)};
    std::vector<Rational> ctrl;
    for (long k = 0; k <= 8; ++k) ctrl.emplace_back(k, 8);
    const SliceBody control = assemble_slice_body(quadric, path, c, ctrl);
    for (size_t i = 1; i + 1 < control.f_samples.size(); ++i) {
        const QuadNum terms[] = {control.f_samples[i - 1].second,
                                 -(control.f_samples[i].second),
                                 -(control.f_samples[i].second),
                                 control.f_samples[i + 1].second};
        expect(sign_of_sum(terms) == 0, "control slice has a nonzero second difference");
    }
    const auto ctrl_cert = nonpolyhedrality_certificate(control);
    expect(!ctrl_cert.non_polyhedral && ctrl_cert.status == "INCONCLUSIVE",
           "control certificate came back " + ctrl_cert.status);
    return "Fano window witnessed exactly; linear control inconclusive with all "
           "second differences zero";
}

std::string k3_mu() {
    const auto m = builtin_models();
    const DivisorClass d = {Rational(1), Rational(0), Rational(0)};
    const DivisorClass c = {Rational(2), Rational(1), Rational(1)};
    const QuadNum computed = mu(m.k3, d, c);
    const QuadNum expected(Rational(1), Rational(-1, 2), 2);
    expect(computed == expected, "mu = " + computed.str());

    // The closed formula ((D.C) - sqrt((D.C)^2 - D^2 C^2)) / C^2, independently.
    const Rational dc = pair(m.k3, d, c), dd = pair(m.k3, d, d), cc = pair(m.k3, c, c);
    const QuadNum closed =
        (QuadNum(dc) - QuadNum::sqrt_of(dc * dc - dd * cc)) / QuadNum(cc);
    expect(closed == computed, "closed formula gives " + closed.str());

    const auto cert = mu_quadratic_certificate(m.k3, d, c);
    expect(cert.A == Rational(8) && cert.B == Rational(-16) && cert.C == Rational(4),
           "certificate (" + cert.A.str() + "," + cert.B.str() + "," + cert.C.str() +
               ")");
    const QuadNum residue =
        QuadNum(cert.A) * computed * computed + QuadNum(cert.B) * computed +
        QuadNum(cert.C);
    expect(residue.sign() == 0, "certificate does not annihilate mu");
    return "mu = " + computed.str() + ", certificate (8,-16,4) annihilates it";
}

VertexList rational_vertices(std::vector<std::pair<long, long>> pts) {
    VertexList out;
    for (auto [x, y] : pts) out.emplace_back(QuadNum(Rational(x)), QuadNum(Rational(y)));
    return out;
}

std::string theorem_b_forward() {
    const auto start = Clock::now();
    const SurfaceModel f1 = oracle::fixture_f1();
    const SurfaceModel bl2 = oracle::fixture_bl2p2();

    struct Case {
        const SurfaceModel* s;
        DivisorClass d;
        FlagData flag;
        VertexList expected;
        Rational p_squared;
    };
    std::vector<Case> cases;
    {
        FlagData at_e;
        at_e.curve_class = {Rational(1), Rational(-1)};
        at_e.multiplicities["E"] = 1;
        cases.push_back({&f1,
                         {Rational(2), Rational(0)},
                         at_e,
                         rational_vertices({{0, 0}, {0, 2}, {2, 2}}),
                         Rational(4)});
        FlagData generic;
        generic.curve_class = {Rational(1), Rational(-1)};
        cases.push_back({&f1,
                         {Rational(2), Rational(0)},
                         generic,
                         rational_vertices({{0, 0}, {0, 2}, {2, 0}}),
                         Rational(4)});
        FlagData b2;
        b2.curve_class = {Rational(1), Rational(-1), Rational(0)};
        cases.push_back({&bl2,
                         {Rational(3), Rational(-2), Rational(0)},
                         b2,
                         rational_vertices({{0, 0}, {0, 1}, {2, 1}, {3, 0}}),
                         Rational(5)});
    }
    for (const auto& c : cases) {
        const OkounkovPolygon poly = okounkov_polygon(*c.s, c.d, c.flag);
        expect(polygons_equal(poly.vertices, c.expected), "polygon mismatch");
        expect(validate_theorem_b(poly).pass, "shape check failed");
        const auto vol = volume_checks(*c.s, c.d, poly);
        expect(vol.pass && vol.p_squared == c.p_squared,
               "volume check: 2*area = " + vol.twice_area.str() + ", P^2 = " +
                   vol.p_squared.str());
    }
    // The quadrilateral's interior breakpoint sits at rational t = 2.
    const OkounkovPolygon quad = okounkov_polygon(bl2, cases[2].d, cases[2].flag);
    bool found = false;
    for (const auto& b : quad.breakpoints)
        found = found || (b.is_rational() && b.as_rational() == Rational(2));
    expect(found, "expected a rational breakpoint at t = 2");
    const double dt = seconds_since(start);
    expect(dt < 1.0, "runtime budget exceeded");
    std::ostringstream os;
    os << "three fixtures exact (2*area = 4, 4, 5) in " << dt << "s";
    return os.str();
}

std::string converse_roundtrip() {
    const auto start = Clock::now();
    std::mt19937_64 rng(0x0c0ffee5u);
    const int rounds = 25;
    for (int i = 0; i < rounds; ++i) {
        const PolyQ poly = oracle::random_theorem_b_polygon(rng);
        const Realization real = realize_polygon(poly);
        PolyQ moved;
        for (const auto& [x, y] : poly)
            moved.emplace_back(x + real.shift_t, y + real.shift_y);
        const VertexList expected = to_vertex_list(moved);

        const PolyQ via_psi = okounkov_via_psi(real.divisor.surface, real.divisor.a,
                                               real.flag_i1, real.flag_i2);
        expect(polygons_equal(to_vertex_list(via_psi), expected),
               "psi image differs from the polygon (round " + std::to_string(i) + ")");

        const ToricModel tm = toric_surface_model(real.divisor.surface);
        const DivisorClass d = toric_divisor_class(tm, real.divisor.a);
        const FlagData flag = toric_flag(tm, real.flag_i1, real.flag_i2);
        const OkounkovPolygon forward = okounkov_polygon(tm.model, d, flag);
        expect(polygons_equal(forward.vertices, expected),
               "decomposition pipeline differs (round " + std::to_string(i) + ")");
    }
    const double dt = seconds_since(start);
    expect(dt < 10.0, "runtime budget exceeded");
    std::ostringstream os;
    os << rounds << " random polygons reproduced by both pipelines in " << dt << "s";
    return os.str();
}

std::string zariski_oracle() {
    std::mt19937_64 rng(0x5eed1234u);
    const std::vector<SurfaceModel> fixtures = {
        oracle::fixture_f1(), oracle::fixture_bl2p2(), oracle::fixture_bl3p2()};
    int decompositions = 0;
    for (const auto& s : fixtures) {
        for (int i = 0; i < 70; ++i) {
            const DivisorClass d = oracle::random_big_class(rng, s, 9);
            const ZariskiDecomposition zd = zariski_decompose(s, d);
            const auto all = oracle::brute_force_decompositions(s, d);
            expect(all.size() == 1,
                   "oracle found " + std::to_string(all.size()) + " decompositions");
            expect(all[0].P == zd.P && all[0].N == zd.N, "oracle disagrees");
            ++decompositions;
        }
    }

    // Walks: coefficients never decrease and the flag curve stays out.
    const std::vector<std::vector<DivisorClass>> flags = {
        {{Rational(1), Rational(-1)}, {Rational(1), Rational(0)}},
        {{Rational(1), Rational(-1), Rational(0)},
         {Rational(1), Rational(0), Rational(0)},
         {Rational(1), Rational(-1), Rational(-1)}},
        {{Rational(1), Rational(-1), Rational(0), Rational(0)},
         {Rational(1), Rational(0), Rational(0), Rational(0)},
         {Rational(2), Rational(-1), Rational(-1), Rational(-1)}}};
    int walks = 0;
    for (size_t fi = 0; fi < fixtures.size(); ++fi) {
        const SurfaceModel& s = fixtures[fi];
        for (int i = 0; i < 25; ++i) {
            const DivisorClass d = oracle::random_big_class(rng, s, 9);
            FlagData flag;
            flag.curve_class = flags[fi][static_cast<size_t>(i) % flags[fi].size()];
            const SegmentWalk walk = segment_walk(s, d, flag);
            const int cidx = s.curve_with_class(flag.curve_class);
            for (const auto& piece : walk.pieces) {
                for (const auto& [name, slope] : piece.B)
                    expect(slope.sign() >= 0,
                           "coefficient of " + name + " decreases along the walk");
                if (cidx >= 0)
                    expect(!piece.support.count(s.curves[cidx].name),
                           "flag curve entered a walk support");
            }
            for (size_t p = 1; p < walk.pieces.size(); ++p)
                expect(walk.pieces[p - 1].t_hi == walk.pieces[p].t_lo,
                       "walk pieces are not contiguous");
            ++walks;
        }
    }
    std::ostringstream os;
    os << decompositions << " decompositions match the subset-enumeration oracle; "
       << walks << " walks monotone with the flag curve excluded";
    return os.str();
}

std::string property_suite() {
    std::mt19937_64 rng(0xfeedbeefu);

    // Bilinearity and symmetry of the intersection pairing.
    {
        const SurfaceModel s = oracle::fixture_bl3p2();
        for (int i = 0; i < 1000; ++i) {
            VecQ u, v, w;
            for (int k = 0; k < s.rank; ++k) {
                u.push_back(oracle::random_rational(rng, 9, 5));
                v.push_back(oracle::random_rational(rng, 9, 5));
                w.push_back(oracle::random_rational(rng, 9, 5));
            }
            const Rational lambda = oracle::random_rational(rng, 9, 5);
            expect(pair(s, vec_add(u, scaled(v, lambda)), w) ==
                       pair(s, u, w) + lambda * pair(s, v, w),
                   "pairing is not bilinear");
            expect(pair(s, v, w) == pair(s, w, v), "pairing is not symmetric");
        }
    }

    // Field axioms in a fixed quadratic field.
    {
        const long rads[] = {2, 3, 5, 6, 7, 10};
        for (int i = 0; i < 1000; ++i) {
            const mpz_class d(rads[static_cast<size_t>(i) % 6]);
            auto draw = [&] {
                return QuadNum(oracle::random_rational(rng, 20, 7),
                               oracle::random_rational(rng, 20, 7), d);
            };
            const QuadNum x = draw(), y = draw(), z = draw();
            expect((x + y) + z == x + (y + z), "addition is not associative");
            expect((x * y) * z == x * (y * z), "multiplication is not associative");
            expect(x * (y + z) == x * y + x * z, "distributivity fails");
            expect((x - y) + y == x, "subtraction fails");
            if (!y.is_zero()) expect((x / y) * y == x, "division fails");
        }
    }

    // Exact sign against the interval-refinement oracle.
    {
        int decided = 0;
        for (int i = 0; i < 10000; ++i) {
            const long rads[] = {0, 2, 3, 5, 7, 11, 13, 30};
            const QuadNum x(oracle::random_rational(rng, 50, 20),
                            oracle::random_rational(rng, 50, 20),
                            mpz_class(rads[static_cast<size_t>(i) % 8]));
            if (const auto s = oracle::interval_sign(x, 64)) {
                expect(*s == x.sign(), "sign disagrees with the interval oracle");
                ++decided;
            }
        }
        expect(decided > 9000, "interval oracle decided too few cases");
    }

    // Fan identities on randomly completed fans.
    {
        std::uniform_int_distribution<int> extra(0, 5);
        std::uniform_int_distribution<long> coord(-9, 9);
        for (int i = 0; i < 1000; ++i) {
            std::vector<RayZ2> rays = {{1, 0}, {0, 1}};
            const int k = extra(rng);
            for (int j = 0; j < k; ++j) {
                const long x = coord(rng), y = coord(rng);
                if (x == 0 && y == 0) continue;
                if (x > 0 && y > 0) continue; // keep the first quadrant clean
                rays.push_back({x, y});
            }
            const ToricSurface fan = smooth_complete_fan(rays);
            const size_t r = fan.rays.size();
            mpz_class square_sum = 0;
            for (size_t a = 0; a < r; ++a) {
                const auto& v = fan.rays[a];
                const auto& w = fan.rays[(a + 1) % r];
                expect(v[0] * w[1] - v[1] * w[0] == 1, "consecutive det is not 1");
                const auto& p = fan.rays[(a + r - 1) % r];
                const auto& nx = fan.rays[(a + 1) % r];
                const mpz_class sx = p[0] + nx[0], sy = p[1] + nx[1];
                mpz_class coeff;
                if (v[0] != 0) coeff = sx / v[0];
                else coeff = sy / v[1];
                expect(sx == coeff * v[0] && sy == coeff * v[1],
                       "neighbor sum leaves the ray line");
                square_sum -= coeff;
            }
            expect(square_sum == 12 - 3 * static_cast<long>(r),
                   "sum of squares is not 12 - 3r");
        }
    }

    // Polygon homogeneity under D -> lambda D, lambda in {2, 3}.
    {
        const std::vector<SurfaceModel> fixtures = {oracle::fixture_f1(),
                                                    oracle::fixture_bl2p2()};
        const std::vector<std::vector<DivisorClass>> flags = {
            {{Rational(1), Rational(-1)}, {Rational(1), Rational(0)}},
            {{Rational(1), Rational(-1), Rational(0)},
             {Rational(1), Rational(-1), Rational(-1)}}};
        int cases = 0;
        for (int i = 0; i < 500; ++i) {
            const size_t fi = static_cast<size_t>(i) % 2;
            const SurfaceModel& s = fixtures[fi];
            const DivisorClass d = oracle::random_big_class(rng, s, 7);
            FlagData flag;
            flag.curve_class = flags[fi][static_cast<size_t>(i) % flags[fi].size()];
            const OkounkovPolygon base = okounkov_polygon(s, d, flag);
            for (long lambda : {2L, 3L}) {
                const OkounkovPolygon big =
                    okounkov_polygon(s, scaled(d, Rational(lambda)), flag);
                expect(polygons_equal(big.vertices,
                                      scaled_polygon(base.vertices, Rational(lambda))),
                       "polygon is not homogeneous");
                ++cases;
            }
        }
        expect(cases >= 1000, "too few homogeneity cases");
    }
    return "pairing bilinearity, field axioms, interval signs (10^4), fan "
           "identities and polygon homogeneity all exact";
}

} // namespace

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    out.push_back(run_check("fano-exactness", fano_exactness));
    out.push_back(run_check("nonpolyhedrality-certificate", nonpolyhedrality));
    out.push_back(run_check("k3-mu-formula", k3_mu));
    out.push_back(run_check("theorem-b-forward", theorem_b_forward));
    out.push_back(run_check("theorem-b-converse-roundtrip", converse_roundtrip));
    out.push_back(run_check("zariski-oracle-equivalence", zariski_oracle));
    out.push_back(run_check("property-suite", property_suite));
    return out;
}

} // namespace okb::verify
