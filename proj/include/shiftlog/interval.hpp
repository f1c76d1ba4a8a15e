#pragma once

#include <algorithm>
#include <stdexcept>

#include "shiftlog/real.hpp"

namespace shiftlog {

/// Closed interval [lo, hi] with outward-rounded endpoint arithmetic.
/// Every operation guarantees: exact inputs inside => exact result inside.
class RealInterval {
public:
    RealInterval() : lo_(32), hi_(32) {}
    RealInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.is_nan() || hi_.is_nan() || lo_ > hi_)
            throw std::invalid_argument("RealInterval: bad endpoints");
    }

    static RealInterval point(const Real& v) { return {v, v}; }
    static RealInterval of(const Rational& q, Precision p) {
        return {Real::of(q, p, MPFR_RNDD), Real::of(q, p, MPFR_RNDU)};
    }
    static RealInterval of(long n, Precision p) { return of(Rational(n), p); }
    static RealInterval of(const BigInt& n, Precision p) {
        return {Real::of(n, p, MPFR_RNDD), Real::of(n, p, MPFR_RNDU)};
    }

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    Precision prec() const { return std::max(lo_.prec(), hi_.prec()); }

    Real width() const { return sub(hi_, lo_, prec(), MPFR_RNDU); }
    Real mid() const { return mul_2si(add(lo_, hi_, prec() + 2), -1, prec()); }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }
    bool contains(const Rational& q) const {
        Real ql = Real::of(q, prec() + 8, MPFR_RNDD);
        Real qh = Real::of(q, prec() + 8, MPFR_RNDU);
        return lo_ <= ql && qh <= hi_;
    }
    bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const RealInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        Precision p = std::max(a.prec(), b.prec());
        return {add(a.lo_, b.lo_, p, MPFR_RNDD), add(a.hi_, b.hi_, p, MPFR_RNDU)};
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        Precision p = std::max(a.prec(), b.prec());
        return {sub(a.lo_, b.hi_, p, MPFR_RNDD), sub(a.hi_, b.lo_, p, MPFR_RNDU)};
    }
    friend RealInterval operator-(const RealInterval& a) {
        return {neg(a.hi_, a.prec()), neg(a.lo_, a.prec())};
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        Precision p = std::max(a.prec(), b.prec());
        Real cands_lo[4] = {mul(a.lo_, b.lo_, p, MPFR_RNDD), mul(a.lo_, b.hi_, p, MPFR_RNDD),
                            mul(a.hi_, b.lo_, p, MPFR_RNDD), mul(a.hi_, b.hi_, p, MPFR_RNDD)};
        Real cands_hi[4] = {mul(a.lo_, b.lo_, p, MPFR_RNDU), mul(a.lo_, b.hi_, p, MPFR_RNDU),
                            mul(a.hi_, b.lo_, p, MPFR_RNDU), mul(a.hi_, b.hi_, p, MPFR_RNDU)};
        Real lo = cands_lo[0], hi = cands_hi[0];
        for (int i = 1; i < 4; ++i) {
            if (cands_lo[i] < lo) lo = cands_lo[i];
            if (cands_hi[i] > hi) hi = cands_hi[i];
        }
        return {lo, hi};
    }
    /// Division; requires b strictly positive or strictly negative.
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
        if (b.contains_zero()) throw std::domain_error("RealInterval: division by interval containing 0");
        Precision p = std::max(a.prec(), b.prec());
        Real cands_lo[4] = {div(a.lo_, b.lo_, p, MPFR_RNDD), div(a.lo_, b.hi_, p, MPFR_RNDD),
                            div(a.hi_, b.lo_, p, MPFR_RNDD), div(a.hi_, b.hi_, p, MPFR_RNDD)};
        Real cands_hi[4] = {div(a.lo_, b.lo_, p, MPFR_RNDU), div(a.lo_, b.hi_, p, MPFR_RNDU),
                            div(a.hi_, b.lo_, p, MPFR_RNDU), div(a.hi_, b.hi_, p, MPFR_RNDU)};
        Real lo = cands_lo[0], hi = cands_hi[0];
        for (int i = 1; i < 4; ++i) {
            if (cands_lo[i] < lo) lo = cands_lo[i];
            if (cands_hi[i] > hi) hi = cands_hi[i];
        }
        return {lo, hi};
    }

    RealInterval scaled(const Rational& q) const {
        Precision p = prec();
        if (q >= 0)
            return {mul_rat(lo_, q, p, MPFR_RNDD), mul_rat(hi_, q, p, MPFR_RNDU)};
        return {mul_rat(hi_, q, p, MPFR_RNDD), mul_rat(lo_, q, p, MPFR_RNDU)};
    }

private:
    Real lo_, hi_;
};

/// log over a strictly positive interval.
inline RealInterval log_interval(const RealInterval& a) {
    if (!a.strictly_positive()) throw std::domain_error("log_interval: needs positive interval");
    return {log(a.lo(), a.prec(), MPFR_RNDD), log(a.hi(), a.prec(), MPFR_RNDU)};
}

/// log max(x, 1) over a nonnegative-capable interval (clamps below at 1).
inline RealInterval log_plus_interval(const RealInterval& a) {
    Precision p = a.prec();
    Real one = Real::of(1L, p);
    Real lo = a.lo() <= one ? Real::of(0L, p) : log(a.lo(), p, MPFR_RNDD);
    Real hi = a.hi() <= one ? Real::of(0L, p) : log(a.hi(), p, MPFR_RNDU);
    return {lo, hi};
}

inline RealInterval exp_interval(const RealInterval& a) {
    return {exp(a.lo(), a.prec(), MPFR_RNDD), exp(a.hi(), a.prec(), MPFR_RNDU)};
}

inline RealInterval hull(const RealInterval& a, const RealInterval& b) {
    return {a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi()};
}

}  // namespace shiftlog
