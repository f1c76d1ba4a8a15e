#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "shiftlog/bigint.hpp"

namespace shiftlog {

using Precision = mpfr_prec_t;

/// Thin RAII wrapper over mpfr_t. Every operation takes an explicit target
/// precision and rounding mode, so interval and ball code can round outward.
class Real {
public:
    explicit Real(Precision prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, Precision p) { Real r(p); mpfr_set_si(r.v_, n, MPFR_RNDN); return r; }
    static Real of(double d, Precision p) { Real r(p); mpfr_set_d(r.v_, d, MPFR_RNDN); return r; }
    static Real of(const BigInt& n, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(p); mpfr_set_z(r.v_, n.get_mpz_t(), rnd); return r;
    }
    static Real of(const Rational& q, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
        Real r(p); mpfr_set_q(r.v_, q.get_mpq_t(), rnd); return r;
    }
    static Real pos_inf(Precision p = 32) { Real r(p); mpfr_set_inf(r.v_, 1); return r; }

    Precision prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact conversion of a finite value to a rational (mpfr values are dyadic).
    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    std::string str(size_t digits = 0) const {
        char* s = nullptr;
        int n = digits ? mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_)
                       : mpfr_asprintf(&s, "%Re", v_);
        if (n < 0) return "?";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

#define SHIFTLOG_BINOP(name, fn)                                              \
    inline Real name(const Real& a, const Real& b, Precision p,               \
                     mpfr_rnd_t rnd = MPFR_RNDN) {                            \
        Real r(p);                                                            \
        fn(r.raw(), a.raw(), b.raw(), rnd);                                   \
        return r;                                                             \
    }

SHIFTLOG_BINOP(add, mpfr_add)
SHIFTLOG_BINOP(sub, mpfr_sub)
SHIFTLOG_BINOP(mul, mpfr_mul)
SHIFTLOG_BINOP(div, mpfr_div)
SHIFTLOG_BINOP(hypot, mpfr_hypot)
SHIFTLOG_BINOP(atan2, mpfr_atan2)
#undef SHIFTLOG_BINOP

#define SHIFTLOG_UNOP(name, fn)                                               \
    inline Real name(const Real& a, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {\
        Real r(p);                                                            \
        fn(r.raw(), a.raw(), rnd);                                            \
        return r;                                                             \
    }

SHIFTLOG_UNOP(neg, mpfr_neg)
SHIFTLOG_UNOP(abs, mpfr_abs)
SHIFTLOG_UNOP(sqrt, mpfr_sqrt)
SHIFTLOG_UNOP(log, mpfr_log)
SHIFTLOG_UNOP(exp, mpfr_exp)
SHIFTLOG_UNOP(sin, mpfr_sin)
SHIFTLOG_UNOP(cos, mpfr_cos)
SHIFTLOG_UNOP(round_to, mpfr_set)
#undef SHIFTLOG_UNOP

inline Real mul_rat(const Real& a, const Rational& q, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_mul_q(r.raw(), a.raw(), q.get_mpq_t(), rnd);
    return r;
}

/// a * 2^e, exact apart from precision change.
inline Real mul_2si(const Real& a, long e, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_mul_2si(r.raw(), a.raw(), e, rnd);
    return r;
}

inline Real div_si(const Real& a, long d, Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_div_si(r.raw(), a.raw(), d, rnd);
    return r;
}

inline Real log2_const(Precision p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_const_log2(r.raw(), rnd);
    return r;
}

}  // namespace shiftlog
