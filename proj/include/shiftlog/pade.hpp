#pragma once

#include <stdexcept>
#include <vector>

#include "shiftlog/arith.hpp"
#include "shiftlog/ball.hpp"
#include "shiftlog/polynomial.hpp"
#include "shiftlog/series.hpp"

namespace shiftlog {

/// Exact rational Pade pair of weight n for the shifted-log series:
/// deg Q = n, deg P = n-1 (P = 0 at n = 0).
struct PadePair {
    long n;
    Rational x;
    RatPolynomial Q;  // degree n
    RatPolynomial P;  // degree n-1
};

/// Coefficients of the order-2 recurrence A_n X_{n+1} - (z - B_n) X_n + C_n X_{n-1} = 0.
struct RecurrenceCoeffs {
    long n;
    Rational A, B, C;
};

inline RecurrenceCoeffs recurrence_coeffs(long n, const Rational& x) {
    if (n < 1) throw std::domain_error("recurrence_coeffs: n must be >= 1");
    Rational A = (n + x + 1) * (n + 1) / ((2 * n + x + 1) * (2 * n + x + 2));
    Rational B = (Rational(2) * n * n + (1 + x) * (2 * n + x)) / ((2 * n + x) * (2 * n + x + 2));
    Rational C = Rational(n) * (n + x) / ((2 * n + x) * (2 * n + x + 1));
    return {n, A, B, C};
}

/// Exact construction from the displayed finite sums.
inline PadePair build_explicit(long n, const Rational& x) {
    require_shift_range(x);
    if (n < 0) throw std::domain_error("build_explicit: n must be >= 0");
    // poch_a[j] = (n+1+x)_j, needed up to j = n+1.
    std::vector<Rational> poch_a(static_cast<size_t>(n) + 2);
    poch_a[0] = 1;
    for (long j = 1; j <= n + 1; ++j) poch_a[j] = poch_a[j - 1] * (n + x + j);
    std::vector<Rational> fact(static_cast<size_t>(n) + 2);
    fact[0] = 1;
    for (long j = 1; j <= n + 1; ++j) fact[j] = fact[j - 1] * j;

    std::vector<Rational> qc(static_cast<size_t>(n) + 1, Rational(0));
    for (long l = 0; l <= n; ++l) {
        Rational term = poch_a[n - l] / fact[n - l] * pochhammer(n - l + 1 + x, l) / fact[l];
        qc[n - l] = (l % 2 ? -term : term);
    }

    std::vector<Rational> pc(static_cast<size_t>(std::max(n, 1L)), Rational(0));
    for (long l = 0; l < n; ++l) {
        Rational s(0);
        for (long k = l; k < n; ++k) {
            Rational term = poch_a[k + 1] / fact[k + 1] * pochhammer(k + 2 + x, n - k - 1) /
                            fact[n - k - 1] * (1 + x) / (k - l + 1 + x);
            s += ((n - k - 1) % 2 ? -term : term);
        }
        pc[l] = s;
    }

    return {n, x, RatPolynomial(std::move(qc)), n == 0 ? RatPolynomial{} : RatPolynomial(std::move(pc))};
}

/// One step of the recurrence: X_{n+1} = ((z - B_n) X_n - C_n X_{n-1}) / A_n.
inline Rational step_recurrence(const Rational& prev, const Rational& cur,
                                const RecurrenceCoeffs& rc, const Rational& z) {
    return ((z - rc.B) * cur - rc.C * prev) / rc.A;
}

inline RatPolynomial step_recurrence(const RatPolynomial& prev, const RatPolynomial& cur,
                                     const RecurrenceCoeffs& rc, const RatPolynomial& z) {
    RatPolynomial t = z * cur - cur.scaled(rc.B) - prev.scaled(rc.C);
    return t.scaled(Rational(1) / rc.A);
}

inline ComplexBall step_recurrence(const ComplexBall& prev, const ComplexBall& cur,
                                   const RecurrenceCoeffs& rc, const ComplexBall& z) {
    ComplexBall t = z * cur - cur.scaled(rc.B) - prev.scaled(rc.C);
    return t.scaled(Rational(1) / rc.A);
}

/// Seeds (X_0, X_1) of the Q-solution: Q_0 = 1, Q_1 = (2+x) z - (1+x).
inline std::pair<Rational, Rational> q_seeds(const Rational& x, const Rational& z) {
    return {Rational(1), (2 + x) * z - (1 + x)};
}
inline std::pair<ComplexBall, ComplexBall> q_seeds(const Rational& x, const ComplexBall& z) {
    return {ComplexBall::exact(1L, z.prec()),
            z.scaled(2 + x) - ComplexBall::exact(1 + x, z.prec())};
}
/// Seeds of the P-solution: P_0 = 0, P_1 = 2+x.
inline std::pair<Rational, Rational> p_seeds(const Rational& x, const Rational&) {
    return {Rational(0), 2 + x};
}
inline std::pair<ComplexBall, ComplexBall> p_seeds(const Rational& x, const ComplexBall& z) {
    return {ComplexBall(z.prec()), ComplexBall::exact(2 + x, z.prec())};
}

/// Series of f: coefficient (1+x)/(k+x+1) on z^{-(k+1)}, k = 0..N-1.
inline TruncatedSeries f_series(const Rational& x, long N) {
    require_shift_range(x);
    if (N < 1) throw std::domain_error("f_series: N must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(N));
    for (long k = 0; k < N; ++k) c[N - 1 - k] = (1 + x) / (k + x + 1);
    return TruncatedSeries::truncated(-N, std::move(c));
}

/// Value of f(z) = (1+x) sum_k z^{-(k+1)}/(k+x+1) on a ball with |z| > 1.
/// Sums terms until the tail bound (1+x)/((N+x+1) L^{N+1}) / (1 - 1/L)
/// with L = lower bound of |z| drops below err_target; the returned radius
/// is that tail plus the propagated input and rounding radius.
inline ComplexBall eval_f(const Rational& x, const ComplexBall& z, const Real& err_target) {
    require_shift_range(x);
    RealInterval az = z.abs_interval();
    Real one = Real::of(1L, kRadPrec);
    if (!(az.lo() > one)) throw std::domain_error("eval_f: requires |z| > 1 over the ball");
    Real L = round_to(az.lo(), kRadPrec, MPFR_RNDD);
    Real geom = rad::div(L, sub(L, one, kRadPrec, MPFR_RNDD));
    Real invL_up = div(one, L, kRadPrec, MPFR_RNDU);

    Precision p = z.prec();
    ComplexBall zinv = z.recip();
    ComplexBall pw = zinv;
    ComplexBall acc(p);
    Real powL = invL_up;  // becomes L^{-(k+2)} inside iteration k
    double log2L = std::max(1e-9, std::log2(std::max(1.0 + 1e-9, L.to_double())));
    const long hard_cap = 64 + static_cast<long>(4.0 * static_cast<double>(p) / log2L);
    Real tail = Real::pos_inf();
    for (long k = 0;; ++k) {
        acc = acc + pw.scaled((1 + x) / (k + x + 1));
        pw = pw * zinv;
        powL = rad::mul(powL, invL_up);
        // tail after terms 0..k
        tail = rad::mul(rad::mul(Real::of((1 + x) / (k + x + 2), kRadPrec, MPFR_RNDU), powL), geom);
        bool done = err_target.sign() > 0 ? tail <= err_target
                                          : tail <= mul_2si(rad::add(acc.mag_upper(), one),
                                                            -static_cast<long>(p), kRadPrec, MPFR_RNDU);
        if (done || k >= hard_cap) break;
    }
    return {acc.re(), acc.im(), rad::add(acc.radius(), tail)};
}

/// Remainder R_n(z), evaluated directly by its own series with the exact term
/// ratio t_{l+1}/t_l = ((l+1)/(l+1-n)) ((l+1+x)/(n+l+x+2)) / z and a geometric
/// tail bound once the ratio modulus upper bound drops to r = (1+L)/(2L) < 1.
inline ComplexBall eval_R(long n, const Rational& x, const ComplexBall& z, const Real& err_target) {
    require_shift_range(x);
    if (n < 0) throw std::domain_error("eval_R: n must be >= 0");
    RealInterval az = z.abs_interval();
    Real one = Real::of(1L, kRadPrec);
    if (!(az.lo() > one)) throw std::domain_error("eval_R: requires |z| > 1 over the ball");
    Real L = round_to(az.lo(), kRadPrec, MPFR_RNDD);
    // r = (1 + L) / (2 L), rounded up; provably eventually >= the term ratio
    Real r_geom = rad::div(add(one, L, kRadPrec, MPFR_RNDU), mul_2si(L, 1, kRadPrec, MPFR_RNDD));
    if (!(r_geom < one))
        throw std::domain_error("eval_R: |z| too close to 1 at this precision");

    // first term t_n = [prod_{i=1..n}(i+x)] n! / (x+2)_{2n} * z^{-(n+1)}
    ComplexBall zinv = z.recip();
    ComplexBall term = zinv.pow_ui(static_cast<unsigned long>(n) + 1);
    for (long i = 1; i <= n; ++i) term = term.scaled(Rational(i) * (i + x));
    for (long j = 0; j < 2 * n; ++j) term = term.scaled(1 / (x + 2 + j));

    ComplexBall acc = term;
    long l = n;
    while (true) {
        // exact rational factor of the next ratio
        Rational fac = Rational(l + 1) * (l + 1 + x) / (Rational(l + 1 - n) * (n + l + x + 2));
        term = term.scaled(fac) * zinv;
        acc = acc + term;
        ++l;
        // ratio modulus upper bound at the NEXT step; the factor is decreasing
        // once it passes below 1, so one check bounds the whole tail
        Rational nf = Rational(l + 1) * (l + 1 + x) / (Rational(l + 1 - n) * (n + l + x + 2));
        Real ratio_up = rad::div(Real::of(nf, kRadPrec, MPFR_RNDU), L);
        if (ratio_up <= r_geom) {
            Real tmag = rad::add(term.mag_upper(), term.radius());
            Real tail = rad::div(rad::mul(tmag, r_geom),
                                 sub(one, r_geom, kRadPrec, MPFR_RNDD));
            bool small_enough = err_target.sign() <= 0 ||
                                tail <= round_to(err_target, kRadPrec, MPFR_RNDD);
            if (small_enough)
                return {acc.re(), acc.im(), rad::add(acc.radius(), tail)};
        }
        if (l > n + 1000000) throw std::runtime_error("eval_R: series failed to converge");
    }
}

/// Exact order check: Q_n f - P_n has zero coefficients on z^{n-1}..z^0 and
/// (1/z)^1..(1/z)^n, i.e. 1/z-valuation >= n+1.
inline bool pade_order_check(long n, const Rational& x) {
    PadePair pp = build_explicit(n, x);
    TruncatedSeries f = f_series(x, 2 * n + 2);
    TruncatedSeries lhs = TruncatedSeries::from_polynomial(pp.Q) * f -
                          TruncatedSeries::from_polynomial(pp.P);
    for (long e = n - 1; e >= -n; --e)
        if (lhs.coeff(e) != 0) return false;
    return true;
}

/// The exact polynomial Q_n P_{n+1} - Q_{n+1} P_n (caller asserts nonzero).
inline RatPolynomial determinant_check(long n, const Rational& x) {
    PadePair a = build_explicit(n, x);
    PadePair b = build_explicit(n + 1, x);
    return a.Q * b.P - b.Q * a.P;
}

}  // namespace shiftlog
