#pragma once

#include <span>
#include <string>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

// Exact element a + b*sqrt(d) of a real quadratic field, d a square-free
// non-negative integer. Canonical form folds d in {0,1} into the rational
// part, so equality of values is structural equality. All comparisons are
// exact; no floating point is involved anywhere.
//
// Arithmetic between two irrational operands requires equal radicands
// (MixedRadicand otherwise); a rational operand combines with anything.
// Radicand canonicalization is square-free factorization by trial division,
// which is fine at the input sizes this library is built for; a radicand
// whose square-free part cannot be certified raises RadicandTooLarge rather
// than returning a possibly wrong answer.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(long n) : a_(n) {}
    QuadNum(Rational a) : a_(std::move(a)) {}
    QuadNum(const Rational& a, const Rational& b, const mpz_class& d);

    // sqrt of a non-negative rational, e.g. 9/4 -> (3/2), 7/4 -> (1/2)sqrt(7).
    static QuadNum sqrt_of(const Rational& r);

    const Rational& rat_part() const { return a_; }
    const Rational& coeff() const { return b_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    const Rational& as_rational() const; // throws MixedRadicand flavour if irrational
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Exact sign by case analysis on the signs of a and b, comparing a^2
    // against b^2 d when they disagree.
    int sign() const;

    // Exact sign of x - y; the radicands may differ (isolate-and-square).
    static int cross_compare(const QuadNum& x, const QuadNum& y);

    QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const;
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    // Rational enclosure [lo, hi] with sqrt(d) bounded to 'bits' binary digits.
    void enclosure(unsigned bits, Rational& lo, Rational& hi) const;

    std::string str() const;     // e.g. "1-1/2*sqrt(2)"
    double approx() const;       // display only

private:
    Rational a_;
    Rational b_;
    mpz_class d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

// Square-free part of n >= 0: n = square * result with result square-free.
mpz_class squarefree_part(const mpz_class& n, mpz_class& square_root_out);

// Exact sign of a sum of quadratic irrationals from possibly distinct fields.
// Terms over the same radicand are combined exactly; a genuinely mixed sum is
// decided by interval refinement, which terminates because distinct
// square-free radicals are linearly independent over Q.
int sign_of_sum(std::span<const QuadNum> terms);

// Exact real roots of A t^2 + B t + C = 0, ascending; a double root is
// reported once, the linear case gives one root, negative discriminant none.
// Throws IdenticallyZero when A = B = C = 0.
std::vector<QuadNum> quadratic_roots(const Rational& A, const Rational& B,
                                     const Rational& C);

} // namespace okb
