#include "okbody/surface.hpp"

#include <algorithm>
#include <sstream>

#include "okbody/errors.hpp"

namespace okb {

namespace {

VecQ to_vecq(const std::vector<mpz_class>& v) {
    VecQ out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(Rational(x));
    return out;
}

void check_dim(const SurfaceModel& s, const DivisorClass& v, const char* what) {
    if (static_cast<int>(v.size()) != s.rank)
        fail("DimensionMismatch",
             std::string(what) + " has length " + std::to_string(v.size()) +
                 ", rank is " + std::to_string(s.rank));
}

MatQ form_as_matq(const SurfaceModel& s) {
    MatQ q(s.rank, VecQ(s.rank));
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) q[i][j] = Rational(s.intersection_matrix[i][j]);
    return q;
}

} // namespace

const CurveEntry* SurfaceModel::find_curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

int SurfaceModel::curve_with_class(const DivisorClass& v) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (to_vecq(curves[i].cls) == v) return static_cast<int>(i);
    return -1;
}

DivisorClass SurfaceModel::curve_class(const CurveEntry& e) const {
    return to_vecq(e.cls);
}

Rational pair(const SurfaceModel& s, const DivisorClass& v, const DivisorClass& w) {
    check_dim(s, v, "divisor");
    check_dim(s, w, "divisor");
    Rational out(0);
    for (int i = 0; i < s.rank; ++i) {
        if (v[i].is_zero()) continue;
        Rational row(0);
        for (int j = 0; j < s.rank; ++j)
            if (!w[j].is_zero()) row += Rational(s.intersection_matrix[i][j]) * w[j];
        out += v[i] * row;
    }
    return out;
}

namespace {

// Strict-or-weak membership for the polyhedral effective cone.
bool poly_eff_member(const SurfaceModel& s, const DivisorClass& v, bool strict) {
    if (s.cone.eff_facets.empty())
        fail("DegenerateCone", "polyhedral model lists no effective facets");
    for (const auto& f : s.cone.eff_facets) {
        const int sg = dot(f, v).sign();
        if (sg < 0 || (strict && sg == 0)) return false;
    }
    return true;
}

bool eff_full_dimensional(const SurfaceModel& s) {
    MatQ gens(s.cone.eff_generators.begin(), s.cone.eff_generators.end());
    return rank(std::move(gens)) == s.rank;
}

} // namespace

bool is_pseff(const SurfaceModel& s, const DivisorClass& v) {
    check_dim(s, v, "divisor");
    if (s.cone.kind == ConeModel::Kind::Quadratic)
        return pair(s, v, v).sign() >= 0 && pair(s, v, s.cone.ample).sign() >= 0;
    return poly_eff_member(s, v, false);
}

bool is_nef(const SurfaceModel& s, const DivisorClass& v) {
    check_dim(s, v, "divisor");
    if (s.cone.kind == ConeModel::Kind::Quadratic) return is_pseff(s, v);
    for (const auto& f : s.cone.nef_facets)
        if (dot(f, v).sign() < 0) return false;
    return true;
}

bool is_big(const SurfaceModel& s, const DivisorClass& v) {
    check_dim(s, v, "divisor");
    if (s.cone.kind == ConeModel::Kind::Quadratic)
        return pair(s, v, v).sign() > 0 && pair(s, v, s.cone.ample).sign() > 0;
    if (!eff_full_dimensional(s))
        fail("DegenerateCone", "effective cone is not full-dimensional");
    return poly_eff_member(s, v, true);
}

std::vector<std::string> validate_surface(const SurfaceModel& s) {
    std::vector<std::string> bad;
    auto complain = [&](const std::string& msg) { bad.push_back(msg); };

    if (s.rank <= 0) {
        complain("rank must be positive");
        return bad;
    }
    if (static_cast<int>(s.basis.size()) != s.rank)
        complain("basis names do not match rank");
    if (static_cast<int>(s.intersection_matrix.size()) != s.rank) {
        complain("intersection matrix is not rank x rank");
        return bad;
    }
    for (const auto& row : s.intersection_matrix)
        if (static_cast<int>(row.size()) != s.rank) {
            complain("intersection matrix is not rank x rank");
            return bad;
        }
    for (int i = 0; i < s.rank; ++i)
        for (int j = i + 1; j < s.rank; ++j)
            if (s.intersection_matrix[i][j] != s.intersection_matrix[j][i]) {
                complain("intersection matrix is not symmetric");
                i = s.rank;
                break;
            }

    // Hodge index: signature must be (1, rank-1).
    const Inertia sig = signature(form_as_matq(s));
    if (!(sig.positive == 1 && sig.negative == s.rank - 1 && sig.zero == 0)) {
        std::ostringstream os;
        os << "signature is (" << sig.positive << "," << sig.negative;
        if (sig.zero) os << ",+" << sig.zero << " null";
        os << "), expected (1," << s.rank - 1 << ")";
        complain(os.str());
    }

    for (const auto& c : s.curves) {
        if (static_cast<int>(c.cls.size()) != s.rank) {
            complain("curve '" + c.name + "' class has wrong length");
            continue;
        }
        const DivisorClass v = to_vecq(c.cls);
        if (!(pair(s, v, v) == Rational(c.self_int)))
            complain("curve '" + c.name + "' recorded self-intersection " +
                     c.self_int.get_str() + " disagrees with the form");
        mpz_class g(0);
        for (const auto& x : c.cls) {
            mpz_class t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            g = t;
        }
        if (g != 1) complain("curve '" + c.name + "' class is not primitive");
    }

    if (s.cone.kind == ConeModel::Kind::Quadratic) {
        if (static_cast<int>(s.cone.ample.size()) != s.rank)
            complain("ample witness has wrong length");
        else if (pair(s, s.cone.ample, s.cone.ample).sign() <= 0)
            complain("ample witness h has h.h <= 0");
    } else {
        for (const auto& g : s.cone.eff_generators)
            if (static_cast<int>(g.size()) != s.rank)
                complain("effective generator has wrong length");
        for (const auto& f : s.cone.eff_facets)
            if (static_cast<int>(f.size()) != s.rank)
                complain("effective facet has wrong length");
        // Double-description check: generators against facets, and tightness.
        for (const auto& g : s.cone.eff_generators)
            for (const auto& f : s.cone.eff_facets)
                if (dot(f, g).sign() < 0) {
                    complain("effective generator violates a listed facet");
                    goto facets_done;
                }
        for (const auto& f : s.cone.eff_facets) {
            MatQ tight;
            for (const auto& g : s.cone.eff_generators)
                if (dot(f, g).is_zero()) tight.push_back(g);
            if (rank(std::move(tight)) < s.rank - 1)
                complain("a listed effective facet is not tight on rank-1 many "
                         "independent generators");
        }
    facets_done:;
    }
    return bad;
}

std::vector<std::string> validate_flag(const SurfaceModel& s, const FlagData& flag) {
    std::vector<std::string> bad;
    if (static_cast<int>(flag.curve_class.size()) != s.rank) {
        bad.push_back("flag curve class has wrong length");
        return bad;
    }
    const int self_idx = s.curve_with_class(flag.curve_class);
    for (const auto& [name, m] : flag.multiplicities) {
        if (m < 0) {
            bad.push_back("multiplicity of '" + name + "' is negative");
            continue;
        }
        if (m == 0) continue;
        const CurveEntry* e = s.find_curve(name);
        if (!e) {
            bad.push_back("multiplicity names unknown curve '" + name + "'");
            continue;
        }
        if (self_idx >= 0 && s.curves[self_idx].name == name) {
            bad.push_back("flag curve itself carries a point multiplicity");
            continue;
        }
        const Rational ec = pair(s, s.curve_class(*e), flag.curve_class);
        if (Rational(m) > ec)
            bad.push_back("m_" + name + " = " + std::to_string(m) +
                          " exceeds E.C = " + ec.str());
    }
    return bad;
}

bool eff_equals_nef(const SurfaceModel& s) {
    if (s.cone.kind == ConeModel::Kind::Quadratic) return true;
    // Eff subset of Nef: every effective generator must satisfy the nef facets.
    for (const auto& g : s.cone.eff_generators)
        for (const auto& f : s.cone.nef_facets)
            if (dot(f, g).sign() < 0) return false;
    // Nef subset of Eff: every extreme nef ray must satisfy the eff facets.
    auto rays = cone_rays_from_facets(s.cone.nef_facets, s.rank);
    if (!rays) return false;
    for (const auto& r : *rays)
        for (const auto& f : s.cone.eff_facets)
            if (dot(f, r).sign() < 0) return false;
    return true;
}

} // namespace okb
