#include <doctest.h>

#include <algorithm>

#include "okbody/linalg.hpp"
#include "oracles.hpp"

using namespace okb;

namespace {
VecQ qv(std::vector<long> v) {
    VecQ out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}

TEST_CASE("determinant, rank, solve") {
    MatQ m = {qv({1, 2}), qv({3, 4})};
    CHECK(det(m) == Rational(-2));
    CHECK(rank(m) == 2);
    CHECK(rank(MatQ{qv({1, 2}), qv({2, 4})}) == 1);
    const auto x = solve(MatQ{qv({2, 1}), qv({1, 3})}, qv({5, 10}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));
    CHECK(!solve(MatQ{qv({1, 1}), qv({1, 1})}, qv({1, 2})).has_value());
}

TEST_CASE("signature by congruence") {
    const auto s1 = signature(MatQ{qv({1, 0}), qv({0, -1})});
    CHECK(s1.positive == 1);
    CHECK(s1.negative == 1);
    const auto s2 = signature(MatQ{qv({1, 0}), qv({0, 1})});
    CHECK(s2.positive == 2);
    // zero diagonal handled by the congruence trick
    const auto s3 = signature(MatQ{qv({0, 1}), qv({1, 0})});
    CHECK(s3.positive == 1);
    CHECK(s3.negative == 1);
    const auto s4 = signature(MatQ{qv({0, 1, 1}), qv({1, 0, 1}), qv({1, 1, 0})});
    CHECK(s4.positive == 1);
    CHECK(s4.negative == 2);
}

TEST_CASE("negative definiteness via leading minors") {
    CHECK(negative_definite(MatQ{qv({-1})}));
    CHECK(negative_definite(MatQ{qv({-2, 1}), qv({1, -2})}));
    CHECK(!negative_definite(MatQ{qv({1})}));
    CHECK(!negative_definite(MatQ{qv({-1, 2}), qv({2, -1})}));
    CHECK(negative_definite(MatQ{})); // empty support
}

TEST_CASE("facet enumeration agrees with the hand-written fixtures") {
    auto sorted = [](std::vector<VecQ> v) {
        std::sort(v.begin(), v.end(), [](const VecQ& a, const VecQ& b) {
            for (size_t i = 0; i < a.size(); ++i)
                if (!(a[i] == b[i])) return a[i] < b[i];
            return false;
        });
        return v;
    };
    for (const SurfaceModel& s : {oracle::fixture_f1(), oracle::fixture_bl2p2(),
                                  oracle::fixture_bl3p2(), oracle::fixture_p2(),
                                  oracle::fixture_p1p1()}) {
        const auto facets = cone_facets_from_generators(s.cone.eff_generators, s.rank);
        REQUIRE(facets.has_value());
        CHECK(sorted(*facets) == sorted(s.cone.eff_facets));
    }
}

TEST_CASE("dual enumeration recovers extreme rays") {
    // Nef cone of the two-point blow-up: dual of its facet description.
    const SurfaceModel s = oracle::fixture_bl2p2();
    const auto rays = cone_rays_from_facets(s.cone.nef_facets, s.rank);
    REQUIRE(rays.has_value());
    // H, H - E1, H - E2 generate; check each recovered ray is one of them.
    const std::vector<VecQ> expected = {qv({1, 0, 0}), qv({1, -1, 0}), qv({1, 0, -1})};
    CHECK(rays->size() == expected.size());
    for (const auto& r : *rays)
        CHECK(std::find(expected.begin(), expected.end(), r) != expected.end());
}

TEST_CASE("primitive scaling") {
    CHECK(primitive(VecQ{Rational(2, 3), Rational(-4, 3)}) == qv({1, -2}));
    CHECK(primitive(VecQ{Rational(0), Rational(5)}) == qv({0, 1}));
    CHECK_THROWS_AS(primitive(VecQ{Rational(0), Rational(0)}), DomainError);
}
