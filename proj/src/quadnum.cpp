#include "okbody/quadnum.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace okb {

namespace {

// Trial-division bound. Factors below it are stripped completely, so any
// radicand whose remaining cofactor is <= bound^2 is certified square-free.
const unsigned long kTrialBound = 1000000UL;

} // namespace

mpz_class squarefree_part(const mpz_class& n, mpz_class& square_root_out) {
    if (n < 0) fail("NegativeRadicand", "square-free part of negative integer");
    square_root_out = 1;
    if (n == 0) return 0;

    mpz_class rem = n, sqfree = 1;
    for (unsigned long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_class(p) * p > rem) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        }
        for (unsigned long i = 0; i < e / 2; ++i) square_root_out *= p;
        if (e % 2) sqfree *= p;
    }
    if (rem > 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
            square_root_out *= root;
        } else if (rem <= mpz_class(kTrialBound) * kTrialBound) {
            sqfree *= rem; // no factor below the bound, so square-free
        } else {
            fail("RadicandTooLarge",
                 "cannot certify square-free part of " + rem.get_str());
        }
    }
    return sqfree;
}

QuadNum::QuadNum(const Rational& a, const Rational& b, const mpz_class& d)
    : a_(a), b_(b), d_(d) {
    if (d_ < 0) fail("NegativeRadicand", "radicand " + d_.get_str());
    if (b_.is_zero() || d_ == 0) {
        b_ = Rational(0);
        d_ = 0;
        return;
    }
    mpz_class root;
    d_ = squarefree_part(d_, root);
    b_ *= Rational(root);
    if (d_ <= 1) { // sqrt(0) = 0, sqrt(1) = 1
        a_ += b_ * Rational(d_);
        b_ = Rational(0);
        d_ = 0;
    }
}

QuadNum QuadNum::sqrt_of(const Rational& r) {
    if (r.sign() < 0) fail("NegativeRadicand", "sqrt of " + r.str());
    // sqrt(p/q) = sqrt(p q)/q
    return QuadNum(Rational(0), Rational(mpz_class(1), r.den()), r.num() * r.den());
}

const Rational& QuadNum::as_rational() const {
    if (!is_rational())
        fail("MixedRadicand", "value " + str() + " is not rational");
    return a_;
}

int QuadNum::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    const int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // Signs disagree: compare a^2 with b^2 d, the larger magnitude wins.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    const int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
}

namespace {

void require_same_field(const QuadNum& x, const QuadNum& y) {
    if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand())
        fail("MixedRadicand",
             "operands in Q(sqrt(" + x.radicand().get_str() + ")) and Q(sqrt(" +
                 y.radicand().get_str() + "))");
}

} // namespace

QuadNum QuadNum::operator+(const QuadNum& o) const {
    require_same_field(*this, o);
    const mpz_class d = is_rational() ? o.d_ : d_;
    return QuadNum(a_ + o.a_, b_ + o.b_, d);
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    require_same_field(*this, o);
    const mpz_class d = is_rational() ? o.d_ : d_;
    return QuadNum(a_ - o.a_, b_ - o.b_, d);
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    require_same_field(*this, o);
    const mpz_class d = is_rational() ? o.d_ : d_;
    const Rational rd(d);
    return QuadNum(a_ * o.a_ + b_ * o.b_ * rd, a_ * o.b_ + b_ * o.a_, d);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) fail("DivisionByZero", "quadratic number division by zero");
    // Multiply by the conjugate; the norm a^2 - b^2 d vanishes only at zero
    // because d is square-free.
    const mpz_class d = is_rational() ? o.d_ : d_;
    const Rational rd(d);
    const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * rd;
    const QuadNum conj(o.a_, -o.b_, d);
    QuadNum prod = *this * conj;
    return QuadNum(prod.a_ / norm, prod.b_ / norm, prod.d_);
}

int QuadNum::cross_compare(const QuadNum& x, const QuadNum& y) {
    if (x.is_rational() || y.is_rational() || x.d_ == y.d_)
        return (x - y).sign();
    // x - y = P + Q with P = (x.a - y.a) + x.b sqrt(dx) and Q = -y.b sqrt(dy).
    const QuadNum P(x.a_ - y.a_, x.b_, x.d_);
    const Rational q_coeff = -y.b_;
    const int sp = P.sign();
    const int sq = q_coeff.sign();
    if (sp == 0) return sq;
    if (sq == 0) return sp;
    if (sp == sq) return sp;
    // Opposite signs: |P| vs |Q| decided by squaring (P^2 stays in Q(sqrt(dx))).
    const QuadNum p2 = P * P;
    const QuadNum diff = p2 - QuadNum(q_coeff * q_coeff * Rational(y.d_));
    const int s2 = diff.sign();
    return s2 == 0 ? 0 : (s2 > 0 ? sp : sq);
}

void QuadNum::enclosure(unsigned bits, Rational& lo, Rational& hi) const {
    if (is_rational()) {
        lo = hi = a_;
        return;
    }
    mpz_class scaled = d_;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class denom(1);
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
    const Rational s_lo(root, denom), s_hi(root + 1, denom);
    if (b_.sign() > 0) {
        lo = a_ + b_ * s_lo;
        hi = a_ + b_ * s_hi;
    } else {
        lo = a_ + b_ * s_hi;
        hi = a_ + b_ * s_lo;
    }
}

int sign_of_sum(std::span<const QuadNum> terms) {
    Rational rat(0);
    std::map<mpz_class, Rational> coeffs;
    for (const auto& t : terms) {
        rat += t.rat_part();
        if (!t.is_rational()) coeffs[t.radicand()] += t.coeff();
    }
    std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });

    if (coeffs.empty()) return rat.sign();
    if (coeffs.size() == 1) {
        const auto& [d, c] = *coeffs.begin();
        return QuadNum(rat, c, d).sign();
    }
    if (rat.is_zero()) {
        int s = coeffs.begin()->second.sign();
        bool uniform = true;
        for (const auto& [d, c] : coeffs) uniform = uniform && c.sign() == s;
        if (uniform) return s;
    }
    // Mixed radicands: the value is nonzero (distinct square-free radicals are
    // linearly independent over Q), so interval refinement terminates.
    for (unsigned bits = 32; bits <= 1u << 14; bits *= 2) {
        Rational lo = rat, hi = rat;
        for (const auto& [d, c] : coeffs) {
            Rational slo, shi;
            QuadNum(Rational(0), c, d).enclosure(bits, slo, shi);
            lo += slo;
            hi += shi;
        }
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    throw std::logic_error("sign_of_sum: refinement failed to separate from zero");
}

std::vector<QuadNum> quadratic_roots(const Rational& A, const Rational& B,
                                     const Rational& C) {
    if (A.is_zero() && B.is_zero() && C.is_zero())
        fail("IdenticallyZero", "quadratic 0 = 0 has no root set");
    if (A.is_zero()) {
        if (B.is_zero()) return {};
        return {QuadNum(-C / B)};
    }
    const Rational disc = B * B - Rational(4) * A * C;
    if (disc.sign() < 0) return {};
    const QuadNum two_a(A * Rational(2));
    if (disc.is_zero()) return {QuadNum(-B) / two_a};
    const QuadNum s = QuadNum::sqrt_of(disc);
    QuadNum r1 = (QuadNum(-B) - s) / two_a;
    QuadNum r2 = (QuadNum(-B) + s) / two_a;
    if (A.sign() < 0) std::swap(r1, r2);
    return {r1, r2};
}

std::string QuadNum::str() const {
    if (is_rational()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_.str();
    if (b_.sign() > 0 && !a_.is_zero()) os << "+";
    if (b_ == Rational(-1)) os << "-";
    else if (!(b_ == Rational(1))) os << b_.str() << "*";
    os << "sqrt(" << d_.get_str() << ")";
    return os.str();
}

double QuadNum::approx() const {
    Rational lo, hi;
    enclosure(64, lo, hi);
    return (lo.approx() + hi.approx()) / 2;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) {
    return os << q.str();
}

} // namespace okb
