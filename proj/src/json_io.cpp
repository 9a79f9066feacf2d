#include "okbody/json_io.hpp"

#include "okbody/errors.hpp"

namespace okb {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QuadNum& q) {
    if (q.is_rational()) return q.as_rational().str();
    Json j;
    j["a"] = q.rat_part().str();
    j["b"] = q.coeff().str();
    j["d"] = q.radicand().get_si();
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    fail("ParseError", "expected a rational as \"p/q\" string or integer");
}

QuadNum scalar_from_json(const Json& j) {
    if (j.is_object())
        return QuadNum(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                       mpz_class(static_cast<long>(j.at("d").get<long long>())));
    return QuadNum(rational_from_json(j));
}

Json to_json(const VecQ& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

VecQ vecq_from_json(const Json& j) {
    if (!j.is_array()) fail("ParseError", "expected an array of rationals");
    VecQ v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

namespace {

std::vector<mpz_class> int_vec_from_json(const Json& j) {
    std::vector<mpz_class> v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.emplace_back(static_cast<long>(x.get<long long>()));
        else if (x.is_string())
            v.emplace_back(x.get<std::string>());
        else
            fail("ParseError", "expected an integer");
    }
    return v;
}

} // namespace

Json to_json(const SurfaceModel& s) {
    Json j;
    j["rank"] = s.rank;
    j["basis"] = s.basis;
    Json q = Json::array();
    for (const auto& row : s.intersection_matrix) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_si());
        q.push_back(r);
    }
    j["intersection_matrix"] = q;
    Json curves = Json::array();
    for (const auto& c : s.curves) {
        Json e;
        e["name"] = c.name;
        Json cls = Json::array();
        for (const auto& x : c.cls) cls.push_back(x.get_si());
        e["class"] = cls;
        curves.push_back(e);
    }
    j["curves"] = curves;
    Json cone;
    if (s.cone.kind == ConeModel::Kind::Quadratic) {
        cone["kind"] = "quadratic";
        cone["ample"] = to_json(s.cone.ample);
    } else {
        cone["kind"] = "polyhedral";
        Json gens = Json::array(), effs = Json::array(), nefs = Json::array();
        for (const auto& g : s.cone.eff_generators) gens.push_back(to_json(g));
        for (const auto& f : s.cone.eff_facets) effs.push_back(to_json(f));
        for (const auto& f : s.cone.nef_facets) nefs.push_back(to_json(f));
        cone["eff_generators"] = gens;
        cone["eff_facets"] = effs;
        cone["nef_facets"] = nefs;
    }
    j["cone"] = cone;
    return j;
}

SurfaceModel surface_from_json(const Json& j) {
    SurfaceModel s;
    s.rank = j.at("rank").get<int>();
    s.basis = j.at("basis").get<std::vector<std::string>>();
    for (const auto& row : j.at("intersection_matrix"))
        s.intersection_matrix.push_back(int_vec_from_json(row));
    if (j.contains("curves"))
        for (const auto& e : j.at("curves")) {
            CurveEntry c;
            c.name = e.at("name").get<std::string>();
            c.cls = int_vec_from_json(e.at("class"));
            s.curves.push_back(std::move(c));
        }
    const Json& cone = j.at("cone");
    const std::string kind = cone.at("kind").get<std::string>();
    if (kind == "quadratic") {
        s.cone.kind = ConeModel::Kind::Quadratic;
        s.cone.ample = vecq_from_json(cone.at("ample"));
    } else if (kind == "polyhedral") {
        s.cone.kind = ConeModel::Kind::Polyhedral;
        for (const auto& g : cone.at("eff_generators"))
            s.cone.eff_generators.push_back(vecq_from_json(g));
        for (const auto& f : cone.at("eff_facets"))
            s.cone.eff_facets.push_back(vecq_from_json(f));
        for (const auto& f : cone.at("nef_facets"))
            s.cone.nef_facets.push_back(vecq_from_json(f));
    } else {
        fail("ParseError", "cone kind must be 'quadratic' or 'polyhedral'");
    }
    // Record self-intersections from the form.
    for (auto& c : s.curves) {
        VecQ v;
        for (const auto& x : c.cls) v.emplace_back(Rational(x));
        const Rational si = pair(s, v, v);
        if (!si.is_integer()) fail("ParseError", "non-integral self-intersection");
        c.self_int = si.num();
    }
    return s;
}

Json to_json(const FlagData& f) {
    Json j;
    Json curve = Json::array();
    for (const auto& x : f.curve_class) {
        if (!x.is_integer()) fail("ParseError", "flag curve class must be integral");
        curve.push_back(x.num().get_si());
    }
    j["curve"] = curve;
    Json mult = Json::object();
    for (const auto& [name, m] : f.multiplicities) mult[name] = m;
    j["multiplicities"] = mult;
    return j;
}

FlagData flag_from_json(const Json& j) {
    FlagData f;
    for (const auto& x : int_vec_from_json(j.at("curve")))
        f.curve_class.emplace_back(Rational(x));
    if (j.contains("multiplicities"))
        for (const auto& [name, m] : j.at("multiplicities").items())
            f.multiplicities[name] = m.get<long>();
    return f;
}

Json to_json(const ZariskiDecomposition& z) {
    Json j;
    j["P"] = to_json(z.P);
    Json n = Json::object();
    for (const auto& [name, c] : z.N) n[name] = c.str();
    j["N"] = n;
    return j;
}

Json to_json(const SegmentWalk& w) {
    Json j;
    j["nu"] = w.nu.str();
    j["mu"] = to_json(w.mu);
    Json pieces = Json::array();
    for (const auto& p : w.pieces) {
        Json pj;
        pj["t_lo"] = to_json(p.t_lo);
        pj["t_hi"] = to_json(p.t_hi);
        Json a = Json::object(), b = Json::object();
        for (const auto& [name, c] : p.A) a[name] = c.str();
        for (const auto& [name, c] : p.B) b[name] = c.str();
        pj["A"] = a;
        pj["B"] = b;
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    return j;
}

Json to_json(const OkounkovPolygon& p) {
    Json j;
    j["nu"] = p.nu.str();
    j["mu"] = to_json(p.mu);
    Json bps = Json::array();
    for (const auto& t : p.breakpoints) bps.push_back(to_json(t));
    j["breakpoints"] = bps;
    Json alpha, beta;
    Json av = Json::array(), bv = Json::array(), as = Json::array(), bs = Json::array();
    for (const auto& v : p.alpha_values) av.push_back(to_json(v));
    for (const auto& v : p.beta_values) bv.push_back(to_json(v));
    for (const auto& v : p.alpha_slopes) as.push_back(v.str());
    for (const auto& v : p.beta_slopes) bs.push_back(v.str());
    alpha["values"] = av;
    alpha["slopes"] = as;
    beta["values"] = bv;
    beta["slopes"] = bs;
    j["alpha"] = alpha;
    j["beta"] = beta;
    Json verts = Json::array();
    for (const auto& [t, y] : p.vertices)
        verts.push_back(Json::array({to_json(t), to_json(y)}));
    j["vertices"] = verts;
    return j;
}

Json to_json(const PolyQ& p) {
    Json verts = Json::array();
    for (const auto& [x, y] : p)
        verts.push_back(Json::array({x.str(), y.str()}));
    Json j;
    j["vertices"] = verts;
    return j;
}

PolyQ polyq_from_json(const Json& j) {
    PolyQ p;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2)
            fail("ParseError", "vertex must be a pair of rationals");
        p.emplace_back(rational_from_json(v[0]), rational_from_json(v[1]));
    }
    return p;
}

Json to_json(const ToricSurface& t) {
    Json rays = Json::array();
    for (const auto& v : t.rays)
        rays.push_back(Json::array({v[0].get_si(), v[1].get_si()}));
    Json j;
    j["rays"] = rays;
    return j;
}

ToricSurface fan_from_json(const Json& j) {
    ToricSurface t;
    for (const auto& v : j.at("rays")) {
        const auto iv = int_vec_from_json(v);
        if (iv.size() != 2) fail("ParseError", "a ray is a pair of integers");
        t.rays.push_back({iv[0], iv[1]});
    }
    return t;
}

Json to_json(const Realization& r) {
    Json j = to_json(r.divisor.surface);
    Json a = Json::array();
    for (const auto& x : r.divisor.a) a.push_back(x.str());
    j["a"] = a;
    j["flag_rays"] = Json::array({r.flag_i1, r.flag_i2});
    j["translation"] = Json::array({r.shift_t.str(), r.shift_y.str()});
    return j;
}

ToricBodyInput toric_body_input_from_json(const Json& j) {
    ToricBodyInput in;
    in.fan = fan_from_json(j);
    for (const auto& x : j.at("a")) in.a.push_back(rational_from_json(x));
    const auto& fr = j.at("flag_rays");
    if (!fr.is_array() || fr.size() != 2)
        fail("ParseError", "flag_rays must be a pair of ray indices");
    in.i1 = fr[0].get<int>();
    in.i2 = fr[1].get<int>();
    if (in.i1 < 0 || in.i2 < 0 || in.i1 >= static_cast<int>(in.fan.rays.size()) ||
        in.i2 >= static_cast<int>(in.fan.rays.size()) || in.i1 == in.i2)
        fail("ParseError", "flag ray indices out of range");
    return in;
}

DivisorPath path_from_json(const Json& j) {
    DivisorPath p;
    p.v0 = vecq_from_json(j.at("v0"));
    p.w = vecq_from_json(j.at("w"));
    const auto& range = j.at("range");
    if (!range.is_array() || range.size() != 2)
        fail("ParseError", "range must be [lo, hi]");
    p.r_lo = rational_from_json(range[0]);
    p.r_hi = rational_from_json(range[1]);
    return p;
}

Json slice_to_json(const SliceBody& body, const NonPolyhedralityReport& cert) {
    Json j;
    Json g;
    g["c0"] = body.g.c0.str();
    g["cr"] = body.g.cr.str();
    g["ct"] = body.g.ct.str();
    j["g"] = g;
    Json f = Json::array();
    for (const auto& [r, value] : body.f_samples) {
        Json e;
        e["r"] = r.str();
        e["value"] = to_json(value);
        f.push_back(e);
    }
    j["f"] = f;
    if (body.closed_form) {
        Json cf;
        cf["A0"] = body.closed_form->A0.str();
        cf["A1"] = body.closed_form->A1.str();
        cf["B"] = body.closed_form->B.str();
        cf["radicand"] = Json::array({body.closed_form->rad0.str(),
                                      body.closed_form->rad1.str(),
                                      body.closed_form->rad2.str()});
        j["closed_form"] = cf;
    }
    j["certificate"] = cert.status;
    if (cert.witness)
        j["witness"] = Json::array({(*cert.witness)[0].str(), (*cert.witness)[1].str(),
                                    (*cert.witness)[2].str()});
    return j;
}

} // namespace okb
