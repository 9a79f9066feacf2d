#include <doctest.h>

#include <random>

#include "okbody/quadnum.hpp"
#include "oracles.hpp"

using okb::QuadNum;
using okb::Rational;

namespace {
QuadNum qn(long a, long b, long d) { return QuadNum(Rational(a), Rational(b), mpz_class(d)); }
}

TEST_CASE("arithmetic in one field") {
    // (1 + sqrt2) + 2 = 3 + sqrt2
    CHECK(qn(1, 1, 2) + QuadNum(Rational(2)) == qn(3, 1, 2));
    // conjugate product collapses to a rational
    const QuadNum prod = qn(1, 1, 2) * qn(1, -1, 2);
    CHECK(prod.is_rational());
    CHECK(prod.as_rational() == Rational(-1));
}

TEST_CASE("canonicalization pulls squares out of the radicand") {
    // sqrt(32) = 4 sqrt(2), checked against the descending square scan
    CHECK(okb::oracle::squarefree_part_by_scan(32) == 2);
    const QuadNum x = qn(8, -1, 32);
    CHECK(x == qn(8, -4, 2));
    CHECK(x / QuadNum(Rational(8)) == QuadNum(Rational(1), Rational(-1, 2), 2));
    // d in {0, 1} folds away
    CHECK(qn(3, 5, 1) == QuadNum(Rational(8)));
    CHECK(qn(3, 5, 0) == QuadNum(Rational(3)));
    // scan oracle agrees with the library factorization on a spread of inputs
    for (long n = 1; n <= 400; ++n) {
        mpz_class root;
        CHECK(okb::squarefree_part(n, root) == okb::oracle::squarefree_part_by_scan(n));
    }
}

TEST_CASE("mixed radicands refuse silently wrong arithmetic") {
    CHECK_THROWS_AS(qn(0, 1, 2) + qn(0, 1, 3), okb::DomainError);
    CHECK_THROWS_AS(qn(1, 1, 5) * qn(1, 1, 7), okb::DomainError);
    CHECK_THROWS_AS(qn(1, 1, 5) / qn(0, 0, 7), okb::DomainError); // zero divisor
}

TEST_CASE("exact sign") {
    CHECK(qn(1, -1, 2).sign() == -1);
    CHECK(qn(0, 0, 7).sign() == 0);
    CHECK(qn(4, -1, 7).sign() == 1); // 16 > 7 by the squaring rule
    CHECK(qn(-4, 1, 7).sign() == -1);
    CHECK(qn(0, -3, 5).sign() == -1);
}

TEST_CASE("cross-field comparison") {
    CHECK(QuadNum::cross_compare(qn(0, 1, 2), qn(0, 1, 3)) == -1);
    CHECK(QuadNum::cross_compare(qn(1, 1, 2), qn(1, 1, 2)) == 0);
    // sign((3 - sqrt7) - (1/2) sqrt2) = +1, also per the interval oracle
    const QuadNum x = qn(4, -1, 7);
    const QuadNum y = QuadNum(Rational(1), Rational(1, 2), 2);
    CHECK(QuadNum::cross_compare(x, y) == 1);
    const QuadNum diff_parts[] = {x, -y};
    CHECK(okb::sign_of_sum(diff_parts) == 1);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const long rads[] = {0, 2, 3, 5, 6, 7};
        const QuadNum a(okb::oracle::random_rational(rng, 30, 9),
                        okb::oracle::random_rational(rng, 30, 9),
                        mpz_class(rads[i % 6]));
        const QuadNum b(okb::oracle::random_rational(rng, 30, 9),
                        okb::oracle::random_rational(rng, 30, 9),
                        mpz_class(rads[(i + 2) % 6]));
        const QuadNum parts[] = {a, -b};
        const int direct = QuadNum::cross_compare(a, b);
        CHECK(direct == okb::sign_of_sum(parts));
    }
}

TEST_CASE("sums over several fields") {
    const QuadNum zero_sum[] = {qn(0, 1, 2), qn(0, 1, 3), qn(0, -1, 2), qn(0, -1, 3)};
    CHECK(okb::sign_of_sum(zero_sum) == 0);
    const QuadNum pos[] = {qn(-3, 1, 2), qn(0, 1, 3)};                 // sqrt2+sqrt3 > 3
    CHECK(okb::sign_of_sum(pos) == 1);
    const QuadNum neg[] = {qn(1, 1, 2), qn(-1, -1, 3)};                // sqrt2 < sqrt3
    CHECK(okb::sign_of_sum(neg) == -1);
}

TEST_CASE("quadratic roots") {
    using okb::quadratic_roots;
    {
        const auto r = quadratic_roots(Rational(1), Rational(-3), Rational(2));
        REQUIRE(r.size() == 2);
        CHECK(r[0] == QuadNum(Rational(1)));
        CHECK(r[1] == QuadNum(Rational(2)));
    }
    {
        // q(D - tC) for the quartic example: expand 4(1-2t)^2 - 4t^2 - 4t^2
        const Rational A = Rational(4) * Rational(4) - Rational(8); // 16 t^2 - 8 t^2
        const Rational B = Rational(-16);
        const Rational C = Rational(4);
        CHECK(A == Rational(8));
        const auto r = quadratic_roots(A, B, C);
        REQUIRE(r.size() == 2);
        CHECK(r[0] == QuadNum(Rational(1), Rational(-1, 2), 2));
        CHECK(r[1] == QuadNum(Rational(1), Rational(1, 2), 2));
    }
    {
        const auto r = quadratic_roots(Rational(0), Rational(2), Rational(-6));
        REQUIRE(r.size() == 1);
        CHECK(r[0] == QuadNum(Rational(3)));
    }
    CHECK(quadratic_roots(Rational(1), Rational(0), Rational(1)).empty());
    CHECK(quadratic_roots(Rational(1), Rational(-2), Rational(1)).size() == 1);
    CHECK_THROWS_AS(quadratic_roots(Rational(0), Rational(0), Rational(0)),
                    okb::DomainError);

    // Roots annihilate the polynomial exactly.
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rational A = okb::oracle::random_rational(rng, 9, 4);
        const Rational B = okb::oracle::random_rational(rng, 9, 4);
        const Rational C = okb::oracle::random_rational(rng, 9, 4);
        if (A.is_zero() && B.is_zero() && C.is_zero()) continue;
        for (const auto& root : quadratic_roots(A, B, C)) {
            const QuadNum value =
                QuadNum(A) * root * root + QuadNum(B) * root + QuadNum(C);
            CHECK(value.sign() == 0);
        }
    }
}

TEST_CASE("negative radicands are rejected") {
    CHECK_THROWS_AS(QuadNum::sqrt_of(Rational(-1)), okb::DomainError);
    CHECK_THROWS_AS(qn(0, 1, -2), okb::DomainError);
}
