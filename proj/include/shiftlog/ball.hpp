#pragma once

#include <stdexcept>
#include <utility>

#include "shiftlog/interval.hpp"
#include "shiftlog/real.hpp"

namespace shiftlog {

// Radii live at a small fixed precision and are always rounded up, so every
// operation preserves containment of the exact value.
inline constexpr Precision kRadPrec = 32;

namespace rad {
inline Real zero() { return Real(kRadPrec); }
inline Real add(const Real& a, const Real& b) { return shiftlog::add(a, b, kRadPrec, MPFR_RNDU); }
inline Real mul(const Real& a, const Real& b) { return shiftlog::mul(a, b, kRadPrec, MPFR_RNDU); }
inline Real div(const Real& a, const Real& b) { return shiftlog::div(a, b, kRadPrec, MPFR_RNDU); }
inline Real up(const Real& a) { return round_to(a, kRadPrec, MPFR_RNDU); }
inline Real abs_up(const Real& a) { return shiftlog::abs(round_to(a, kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDU); }
}  // namespace rad

/// Complex midpoint-radius ball: disk of radius rad around (re, im).
class ComplexBall {
public:
    explicit ComplexBall(Precision p = 64) : re_(p), im_(p), rad_(rad::zero()) {}
    ComplexBall(Real re, Real im, Real rad)
        : re_(std::move(re)), im_(std::move(im)), rad_(rad::up(rad)) {
        if (rad_.sign() < 0) throw std::invalid_argument("ComplexBall: negative radius");
    }

    static ComplexBall exact(const Rational& re, const Rational& im, Precision p) {
        ComplexBall b(p);
        int e1 = mpfr_set_q(b.re_.raw(), re.get_mpq_t(), MPFR_RNDN);
        int e2 = mpfr_set_q(b.im_.raw(), im.get_mpq_t(), MPFR_RNDN);
        if (e1 != 0 || e2 != 0) b.rad_ = b.rounding_slop(2);
        return b;
    }
    static ComplexBall exact(const Rational& re, Precision p) { return exact(re, Rational(0), p); }
    static ComplexBall exact(long re, Precision p) { return exact(Rational(re), Rational(0), p); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const Real& radius() const { return rad_; }
    Precision prec() const { return re_.prec(); }

    bool is_exact_zero() const { return re_.is_zero() && im_.is_zero() && rad_.is_zero(); }

    /// Upper bound of |midpoint|.
    Real mag_upper() const {
        return hypot(rad::abs_up(re_), rad::abs_up(im_), kRadPrec, MPFR_RNDU);
    }
    /// Lower bound of |midpoint|.
    Real mag_lower() const {
        // rounding |re|, |im| toward zero first keeps the hypot a lower bound
        Real ar = round_to(shiftlog::abs(re_, re_.prec()), kRadPrec, MPFR_RNDD);
        Real ai = round_to(shiftlog::abs(im_, im_.prec()), kRadPrec, MPFR_RNDD);
        return hypot(ar, ai, kRadPrec, MPFR_RNDD);
    }

    /// Interval certainly containing |z| for every z in the ball.
    RealInterval abs_interval() const {
        Precision p = prec();
        Real lo = sub(hypot(re_, im_, p, MPFR_RNDD), rad_, p, MPFR_RNDD);
        Real hi = add(hypot(re_, im_, p, MPFR_RNDU), rad_, p, MPFR_RNDU);
        if (lo.sign() < 0) lo = Real(p);
        return {lo, hi};
    }

    /// Interval containing the real part (resp. imaginary part) of the ball.
    RealInterval re_interval() const {
        return {sub(re_, rad_, prec(), MPFR_RNDD), add(re_, rad_, prec(), MPFR_RNDU)};
    }
    RealInterval im_interval() const {
        return {sub(im_, rad_, prec(), MPFR_RNDD), add(im_, rad_, prec(), MPFR_RNDU)};
    }

    ComplexBall round_to_prec(Precision p) const {
        ComplexBall b(p);
        b.re_ = round_to(re_, p);
        b.im_ = round_to(im_, p);
        b.rad_ = rad::add(rad_, rounding_slop_at(p, 2));
        return b;
    }

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
        Precision p = std::max(a.prec(), b.prec());
        ComplexBall r(p);
        r.re_ = add(a.re_, b.re_, p);
        r.im_ = add(a.im_, b.im_, p);
        r.rad_ = rad::add(rad::add(a.rad_, b.rad_), r.rounding_slop(2));
        return r;
    }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
        Precision p = std::max(a.prec(), b.prec());
        ComplexBall r(p);
        r.re_ = sub(a.re_, b.re_, p);
        r.im_ = sub(a.im_, b.im_, p);
        r.rad_ = rad::add(rad::add(a.rad_, b.rad_), r.rounding_slop(2));
        return r;
    }
    friend ComplexBall operator-(const ComplexBall& a) {
        ComplexBall r(a.prec());
        r.re_ = neg(a.re_, a.prec());
        r.im_ = neg(a.im_, a.prec());
        r.rad_ = a.rad_;
        return r;
    }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
        Precision p = std::max(a.prec(), b.prec());
        ComplexBall r(p);
        Real t1 = mul(a.re_, b.re_, p + 4), t2 = mul(a.im_, b.im_, p + 4);
        Real t3 = mul(a.re_, b.im_, p + 4), t4 = mul(a.im_, b.re_, p + 4);
        r.re_ = sub(t1, t2, p);
        r.im_ = add(t3, t4, p);
        Real ma = a.mag_upper(), mb = b.mag_upper();
        // |ab - a0 b0| <= ra |b0| + |a0| rb + ra rb, plus midpoint rounding
        Real prop = rad::add(rad::mul(a.rad_, rad::add(mb, b.rad_)), rad::mul(b.rad_, ma));
        Real slop = mul_2si(rad::mul(rad::add(ma, a.rad_), rad::add(mb, b.rad_)),
                            -static_cast<long>(p) + 4, kRadPrec, MPFR_RNDU);
        r.rad_ = rad::add(prop, slop);
        return r;
    }

    /// Multiply by an exact rational scalar.
    ComplexBall scaled(const Rational& q) const {
        Precision p = prec();
        ComplexBall r(p);
        r.re_ = mul_rat(re_, q, p);
        r.im_ = mul_rat(im_, q, p);
        Real aq = shiftlog::abs(Real::of(q, kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDU);
        r.rad_ = rad::add(rad::mul(rad_, aq), r.rounding_slop(2));
        return r;
    }

    /// 1/z; requires the ball to exclude zero.
    ComplexBall recip() const {
        Precision p = prec();
        Real lo = sub(mag_lower(), rad_, kRadPrec, MPFR_RNDD);
        if (lo.sign() <= 0) throw std::domain_error("ComplexBall::recip: ball contains 0");
        ComplexBall r(p);
        Real d = add(mul(re_, re_, p + 8), mul(im_, im_, p + 8), p + 8);
        r.re_ = div(re_, d, p);
        r.im_ = neg(div(im_, d, p), p);
        // |1/z - 1/z0| = |z - z0| / (|z| |z0|) <= rad / (lo * mag_lower)
        Real prop = rad::div(rad_, shiftlog::mul(lo, mag_lower(), kRadPrec, MPFR_RNDD));
        r.rad_ = rad::add(prop, r.rounding_slop(5));
        return r;
    }

    /// One square root of the ball (either branch may be returned; the pair
    /// {+s, -s} covers the true square roots). Requires ball away from zero.
    ComplexBall sqrt_any_branch() const {
        Precision p = prec();
        Real maglo = mag_lower();
        Real safe = sub(maglo, mul_2si(maglo, -2, kRadPrec, MPFR_RNDU), kRadPrec, MPFR_RNDD);
        if (!(rad_ < safe))  // require rad < (3/4)|z0| so |z| stays near |z0|
            throw std::domain_error("ComplexBall::sqrt: ball too close to 0");
        Real h = hypot(re_, im_, p + 8);
        Real th = atan2(im_, re_, p + 8);
        Real sr = sqrt(h, p + 8);
        Real th2 = mul_2si(th, -1, p + 8);
        ComplexBall r(p);
        r.re_ = mul(sr, cos(th2, p + 8), p);
        r.im_ = mul(sr, sin(th2, p + 8), p);
        // choosing the branch of sqrt(z) nearest to ±sqrt(z0):
        // |sqrt z - (±)sqrt z0| <= |z - z0| / sqrt(|z| + |z0|) <= rad / sqrt(|z0|)
        Real prop = rad::div(rad_, sqrt(maglo, kRadPrec, MPFR_RNDD));
        r.rad_ = rad::add(prop, r.rounding_slop(6));
        return r;
    }

    /// z^k by repeated squaring, k >= 0.
    ComplexBall pow_ui(unsigned long k) const {
        ComplexBall acc = ComplexBall::exact(1L, prec());
        ComplexBall base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// Does this ball certainly contain the given exact complex rational?
    /// Decided exactly: midpoints and radii are dyadic rationals.
    bool contains(const Rational& x, const Rational& y) const {
        Rational dx = x - re_.to_rational();
        Rational dy = y - im_.to_rational();
        Rational r = rad_.to_rational();
        return dx * dx + dy * dy <= r * r;
    }

    /// Lower bound on the distance between the midpoints of two balls.
    static Real mid_distance_lower(const ComplexBall& a, const ComplexBall& b) {
        Precision p = std::max(a.prec(), b.prec()) + 8;
        Real dx = sub(a.re_, b.re_, p);
        Real dy = sub(a.im_, b.im_, p);
        Real h = hypot(shiftlog::abs(round_to(dx, kRadPrec, MPFR_RNDD), kRadPrec, MPFR_RNDD),
                       shiftlog::abs(round_to(dy, kRadPrec, MPFR_RNDD), kRadPrec, MPFR_RNDD),
                       kRadPrec, MPFR_RNDD);
        // dx, dy each rounded: shave a few ulps to stay a lower bound
        Real shave = mul_2si(h, -static_cast<long>(p) + 6, kRadPrec, MPFR_RNDU);
        Real out = sub(h, shave, kRadPrec, MPFR_RNDD);
        return out.sign() < 0 ? Real(kRadPrec) : out;
    }

private:
    Real rounding_slop(long op_bits) const { return rounding_slop_at(prec(), op_bits); }
    Real rounding_slop_at(Precision p, long op_bits) const {
        Real m = hypot(rad::abs_up(re_), rad::abs_up(im_), kRadPrec, MPFR_RNDU);
        return mul_2si(m, -static_cast<long>(p) + op_bits, kRadPrec, MPFR_RNDU);
    }

    Real re_, im_, rad_;
};

/// z * w where w is given as exact rational complex (x + y i).
inline ComplexBall mul_exact(const ComplexBall& z, const Rational& x, const Rational& y) {
    Precision p = z.prec();
    ComplexBall w = ComplexBall::exact(x, y, p + 8);
    return z * w;
}

}  // namespace shiftlog
