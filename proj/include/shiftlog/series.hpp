#pragma once

#include <stdexcept>
#include <vector>

#include "shiftlog/polynomial.hpp"

namespace shiftlog {

/// Truncated Laurent series in z: exact rational coefficients on the exponent
/// window [lo, hi] (z^lo ... z^hi). Coefficients above hi are exactly zero;
/// coefficients below lo are unknown unless exact_below() holds (in which case
/// the object is an exact Laurent polynomial). Arithmetic tracks the window so
/// no operation ever claims a coefficient beyond its valid truncation order.
class TruncatedSeries {
public:
    TruncatedSeries() : lo_(0), exact_below_(true) {}

    static TruncatedSeries from_polynomial(const RatPolynomial& p) {
        TruncatedSeries s;
        s.lo_ = 0;
        s.exact_below_ = true;
        s.c_ = p.coeffs();
        s.normalize();
        return s;
    }

    /// Series with given coefficients on [lo, lo + n - 1], truncated below lo.
    static TruncatedSeries truncated(long lo, std::vector<Rational> coeffs) {
        TruncatedSeries s;
        s.lo_ = lo;
        s.exact_below_ = false;
        s.c_ = std::move(coeffs);
        s.normalize();
        return s;
    }

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    bool exact_below() const { return exact_below_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// Coefficient of z^e. Throws if e lies below the valid window.
    Rational coeff(long e) const {
        if (e < lo_ && !exact_below_)
            throw std::out_of_range("TruncatedSeries::coeff: exponent below truncation order");
        if (e < lo_ || e > hi()) return Rational(0);
        return c_[static_cast<size_t>(e - lo_)];
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, 1);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, -1);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r;
        long lo = a.lo_ + b.lo_;
        long n = static_cast<long>(a.c_.size() + b.c_.size());
        std::vector<Rational> c(n > 0 ? n - 1 : 0, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        r.lo_ = lo;
        r.c_ = std::move(c);
        r.exact_below_ = a.exact_below_ && b.exact_below_;
        // truncation of one factor contaminates products against the other's top
        long valid = r.exact_below_ ? lo : std::max(a.exact_below_ ? lo : a.lo_ + b.hi(),
                                                    b.exact_below_ ? lo : b.lo_ + a.hi());
        r.clip_below(valid);
        r.normalize();
        return r;
    }

private:
    static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
        TruncatedSeries r;
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::max(a.hi(), b.hi());
        if (a.c_.empty() && b.c_.empty()) {
            r.lo_ = std::max(a.lo_, b.lo_);
            r.exact_below_ = a.exact_below_ && b.exact_below_;
            return r;
        }
        std::vector<Rational> c(static_cast<size_t>(hi - lo + 1), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[a.lo_ - lo + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[b.lo_ - lo + i] += sign * b.c_[i];
        r.lo_ = lo;
        r.c_ = std::move(c);
        r.exact_below_ = a.exact_below_ && b.exact_below_;
        long valid = lo;
        if (!a.exact_below_) valid = std::max(valid, a.lo_);
        if (!b.exact_below_) valid = std::max(valid, b.lo_);
        r.clip_below(valid);
        r.normalize();
        return r;
    }

    void clip_below(long valid) {
        if (valid <= lo_) return;
        long drop = valid - lo_;
        if (drop >= static_cast<long>(c_.size())) {
            c_.clear();
        } else {
            c_.erase(c_.begin(), c_.begin() + drop);
        }
        lo_ = valid;
        exact_below_ = false;
    }

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    long lo_;
    bool exact_below_;
    std::vector<Rational> c_;  // c_[i] = coefficient of z^{lo_ + i}
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; }
inline Rational series_coeff(const TruncatedSeries& s, long e) { return s.coeff(e); }

}  // namespace shiftlog
