#include "oracles.hpp"

#include <algorithm>

#include "okbody/errors.hpp"
#include "okbody/okounkov.hpp"

namespace okb::oracle {

std::optional<int> interval_sign(const QuadNum& x, unsigned bits) {
    Rational lo, hi;
    x.enclosure(bits, lo, hi);
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    if (lo.sign() == 0 && hi.sign() == 0) return 0;
    return std::nullopt;
}

mpz_class squarefree_part_by_scan(const mpz_class& n) {
    if (n <= 0) return n == 0 ? mpz_class(0) : mpz_class(1);
    mpz_class f;
    mpz_sqrt(f.get_mpz_t(), n.get_mpz_t());
    for (; f > 1; --f)
        if (n % (f * f) == 0) break;
    return n / (f * f);
}

std::vector<ZariskiDecomposition> brute_force_decompositions(const SurfaceModel& s,
                                                             const DivisorClass& d) {
    std::vector<DivisorClass> classes;
    std::vector<std::string> names;
    for (const auto& c : s.curves) {
        classes.push_back(s.curve_class(c));
        names.push_back(c.name);
    }
    const size_t n = classes.size();
    std::vector<ZariskiDecomposition> found;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<size_t> subset;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(i);
        const size_t k = subset.size();
        MatQ gram(k, VecQ(k));
        VecQ rhs(k);
        for (size_t i = 0; i < k; ++i) {
            rhs[i] = pair(s, d, classes[subset[i]]);
            for (size_t j = 0; j < k; ++j)
                gram[i][j] = pair(s, classes[subset[i]], classes[subset[j]]);
        }
        const auto sol = solve(std::move(gram), rhs);
        if (!sol) continue;
        bool nonneg = true;
        for (const auto& c : *sol) nonneg = nonneg && c.sign() >= 0;
        if (!nonneg) continue;
        DivisorClass p = d;
        for (size_t i = 0; i < k; ++i)
            p = vec_sub(p, scaled(classes[subset[i]], (*sol)[i]));
        if (!is_nef(s, p)) continue;
        ZariskiDecomposition zd;
        zd.P = p;
        for (size_t i = 0; i < k; ++i)
            if ((*sol)[i].sign() > 0) zd.N[names[subset[i]]] = (*sol)[i];
        bool duplicate = false;
        for (const auto& other : found)
            duplicate = duplicate || (other.P == zd.P && other.N == zd.N);
        if (!duplicate) found.push_back(std::move(zd));
    }
    return found;
}

namespace {

SurfaceModel polyhedral_model(int rank, std::vector<std::string> basis,
                              std::vector<std::vector<mpz_class>> q,
                              std::vector<std::pair<std::string, std::vector<mpz_class>>> curves,
                              std::vector<VecQ> gens, std::vector<VecQ> eff_facets,
                              std::vector<VecQ> nef_facets) {
    SurfaceModel s;
    s.rank = rank;
    s.basis = std::move(basis);
    s.intersection_matrix = std::move(q);
    for (auto& [name, cls] : curves) {
        CurveEntry e;
        e.name = name;
        e.cls = cls;
        VecQ v;
        for (const auto& x : cls) v.emplace_back(Rational(x));
        e.self_int = pair(s, v, v).num();
        s.curves.push_back(std::move(e));
    }
    s.cone.kind = ConeModel::Kind::Polyhedral;
    s.cone.eff_generators = std::move(gens);
    s.cone.eff_facets = std::move(eff_facets);
    s.cone.nef_facets = std::move(nef_facets);
    if (const auto bad = validate_surface(s); !bad.empty())
        fail("InvalidModel", "fixture invalid: " + bad.front());
    return s;
}

VecQ qv(std::vector<long> v) {
    VecQ out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

SurfaceModel fixture_f1() {
    return polyhedral_model(
        2, {"H", "E"}, {{1, 0}, {0, -1}},
        {{"E", {0, 1}}},
        {qv({0, 1}), qv({1, -1})},
        {qv({1, 0}), qv({1, 1})},
        {qv({0, -1}), qv({1, 1})});
}

SurfaceModel fixture_bl2p2() {
    return polyhedral_model(
        3, {"H", "E1", "E2"}, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
        {{"E1", {0, 1, 0}}, {"E2", {0, 0, 1}}, {"L12", {1, -1, -1}}},
        {qv({0, 1, 0}), qv({0, 0, 1}), qv({1, -1, -1})},
        {qv({1, 0, 0}), qv({1, 1, 0}), qv({1, 0, 1})},
        {qv({0, -1, 0}), qv({0, 0, -1}), qv({1, 1, 1})});
}

SurfaceModel fixture_bl3p2() {
    return polyhedral_model(
        4, {"H", "E1", "E2", "E3"},
        {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
        {{"E1", {0, 1, 0, 0}},
         {"E2", {0, 0, 1, 0}},
         {"E3", {0, 0, 0, 1}},
         {"L12", {1, -1, -1, 0}},
         {"L13", {1, -1, 0, -1}},
         {"L23", {1, 0, -1, -1}}},
        {qv({0, 1, 0, 0}), qv({0, 0, 1, 0}), qv({0, 0, 0, 1}), qv({1, -1, -1, 0}),
         qv({1, -1, 0, -1}), qv({1, 0, -1, -1})},
        {qv({1, 0, 0, 0}), qv({1, 1, 0, 0}), qv({1, 0, 1, 0}), qv({1, 0, 0, 1}),
         qv({2, 1, 1, 1})},
        {qv({0, -1, 0, 0}), qv({0, 0, -1, 0}), qv({0, 0, 0, -1}), qv({1, 1, 1, 0}),
         qv({1, 1, 0, 1}), qv({1, 0, 1, 1})});
}

SurfaceModel fixture_p2() {
    return polyhedral_model(1, {"L"}, {{1}}, {}, {qv({1})}, {qv({1})}, {qv({1})});
}

SurfaceModel fixture_p1p1() {
    return polyhedral_model(2, {"f1", "f2"}, {{0, 1}, {1, 0}}, {},
                            {qv({1, 0}), qv({0, 1})},
                            {qv({1, 0}), qv({0, 1})},
                            {qv({1, 0}), qv({0, 1})});
}

SurfaceModel fixture_blowup_seshadri() { return fixture_f1(); }

Rational random_rational(std::mt19937_64& rng, long bound_num, long bound_den,
                         bool non_negative) {
    std::uniform_int_distribution<long> num(non_negative ? 0 : -bound_num, bound_num);
    std::uniform_int_distribution<long> den(1, bound_den);
    return Rational(num(rng), den(rng));
}

DivisorClass random_big_class(std::mt19937_64& rng, const SurfaceModel& s,
                              long coeff_bound) {
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        DivisorClass d;
        for (int i = 0; i < s.rank; ++i) d.emplace_back(coeff(rng));
        bool strict = true;
        for (const auto& f : s.cone.eff_facets)
            strict = strict && dot(f, d).sign() > 0;
        if (strict) return d;
    }
    fail("InvalidModel", "could not sample a big class");
}

PolyQ random_theorem_b_polygon(std::mt19937_64& rng, int max_pieces) {
    // All reduced fractions p/q with |p| <= 7, 1 <= q <= 7.
    static const std::vector<Rational> kSlopes = [] {
        std::vector<Rational> out;
        for (long p = -7; p <= 7; ++p)
            for (long q = 1; q <= 7; ++q) {
                const Rational r(p, q);
                if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            }
        return out;
    }();

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::uniform_int_distribution<int> pieces(1, max_pieces);
        std::uniform_int_distribution<size_t> pick(0, kSlopes.size() - 1);
        std::uniform_int_distribution<long> width_num(1, 4);
        std::uniform_int_distribution<long> width_den(1, 3);
        std::uniform_int_distribution<long> gap(0, 3);

        auto draw_slopes = [&](int k, bool lower) {
            std::vector<Rational> out;
            while (static_cast<int>(out.size()) < k) {
                const Rational s = kSlopes[pick(rng)];
                if (lower && s.sign() < 0) continue;
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
            }
            std::sort(out.begin(), out.end());
            if (!lower) std::reverse(out.begin(), out.end());
            return out;
        };
        const auto alpha_slopes = draw_slopes(pieces(rng), true);   // ascending
        const auto beta_slopes = draw_slopes(pieces(rng), false);   // descending

        auto draw_widths = [&](size_t k) {
            std::vector<Rational> w;
            for (size_t i = 0; i < k; ++i)
                w.emplace_back(width_num(rng), width_den(rng));
            return w;
        };
        auto widths_a = draw_widths(alpha_slopes.size());
        auto widths_b = draw_widths(beta_slopes.size());
        // Rescale the beta widths so both boundaries span the same interval.
        Rational total_a(0), total_b(0);
        for (const auto& w : widths_a) total_a += w;
        for (const auto& w : widths_b) total_b += w;
        for (auto& w : widths_b) w *= total_a / total_b;

        const Rational y0 = Rational(gap(rng));        // alpha(0) >= 0
        const Rational b0 = y0 + Rational(gap(rng));   // beta(0) >= alpha(0)

        PolyQ lower, upper;
        Rational t(0), y = y0;
        lower.emplace_back(t, y);
        for (size_t i = 0; i < alpha_slopes.size(); ++i) {
            t += widths_a[i];
            y += alpha_slopes[i] * widths_a[i];
            lower.emplace_back(t, y);
        }
        t = Rational(0);
        y = b0;
        upper.emplace_back(t, y);
        for (size_t i = 0; i < beta_slopes.size(); ++i) {
            t += widths_b[i];
            y += beta_slopes[i] * widths_b[i];
            upper.emplace_back(t, y);
        }
        // beta - alpha is concave, so the endpoints decide the gap.
        if (upper.back().second < lower.back().second) continue;
        if (b0 == y0 && upper.back().second == lower.back().second) continue;

        PolyQ poly = lower;
        if (!(upper.back() == poly.back())) poly.push_back(upper.back());
        for (size_t i = upper.size() - 1; i-- > 0;)
            if (!(upper[i] == poly.front())) poly.push_back(upper[i]);

        try {
            if (!validate_theorem_b(to_vertex_list(poly)).pass) continue;
        } catch (const DomainError&) {
            continue;
        }
        return poly;
    }
    fail("InvalidModel", "polygon sampler failed");
}

} // namespace okb::oracle
