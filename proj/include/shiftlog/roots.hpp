#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shiftlog/ball.hpp"
#include "shiftlog/polynomial.hpp"

namespace shiftlog {

struct NonSquarefreeError : std::runtime_error {
    NonSquarefreeError() : std::runtime_error("polynomial is not squarefree") {}
};

struct PrecisionCapError : std::runtime_error {
    explicit PrecisionCapError(Precision cap, const std::string& what)
        : std::runtime_error(what + " (precision cap " + std::to_string(cap) + " bits)"),
          cap_bits(cap) {}
    Precision cap_bits;
};

struct RootFindOptions {
    Precision start_prec = 128;
    Precision prec_cap = 16384;
};

namespace detail {

struct Cpx {
    Real re, im;
    explicit Cpx(Precision p) : re(p), im(p) {}
};

inline Cpx cadd(const Cpx& a, const Cpx& b, Precision p) {
    Cpx r(p);
    r.re = add(a.re, b.re, p);
    r.im = add(a.im, b.im, p);
    return r;
}
inline Cpx csub(const Cpx& a, const Cpx& b, Precision p) {
    Cpx r(p);
    r.re = sub(a.re, b.re, p);
    r.im = sub(a.im, b.im, p);
    return r;
}
inline Cpx cmul(const Cpx& a, const Cpx& b, Precision p) {
    Cpx r(p);
    r.re = sub(mul(a.re, b.re, p), mul(a.im, b.im, p), p);
    r.im = add(mul(a.re, b.im, p), mul(a.im, b.re, p), p);
    return r;
}
inline Cpx cdiv(const Cpx& a, const Cpx& b, Precision p) {
    Real d = add(mul(b.re, b.re, p), mul(b.im, b.im, p), p);
    Cpx r(p);
    r.re = div(add(mul(a.re, b.re, p), mul(a.im, b.im, p), p), d, p);
    r.im = div(sub(mul(a.im, b.re, p), mul(a.re, b.im, p), p), d, p);
    return r;
}
inline Real cabs(const Cpx& a, Precision p) { return hypot(a.re, a.im, p); }

/// Horner evaluation of p and p' at a point.
inline void eval_with_derivative(const std::vector<Cpx>& coeffs, const Cpx& z, Precision p,
                                 Cpx& out_v, Cpx& out_d) {
    Cpx v(p), d(p);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        d = cadd(cmul(d, z, p), v, p);
        v = cadd(cmul(v, z, p), *it, p);
    }
    out_v = v;
    out_d = d;
}

/// Taylor shift: coefficients of p(X + c).
inline RatPolynomial taylor_shift(const RatPolynomial& p, const Rational& c) {
    std::vector<Rational> a = p.coeffs();
    long d = p.degree();
    for (long i = 0; i < d; ++i)
        for (long j = d - 1; j >= i; --j) a[j] += c * a[j + 1];
    return RatPolynomial(std::move(a));
}

/// Fujiwara-style containment radius for the roots of q (all roots have
/// modulus <= 2 max_k |q_{d-k}/q_d|^{1/k}).
inline double fujiwara_radius(const RatPolynomial& q) {
    long d = q.degree();
    Real lcl = log(abs(Real::of(q.lc(), 64), 64), 64);
    double best = 0.0;
    bool any = false;
    for (long k = 1; k <= d; ++k) {
        Rational c = q.coeff(d - k);
        if (c == 0) continue;
        Real lg = log(abs(Real::of(c, 64), 64), 64);
        double r = (lg.to_double() - lcl.to_double()) / static_cast<double>(k);
        best = any ? std::max(best, r) : r;
        any = true;
    }
    if (!any) return 1.0;
    return 2.0 * std::exp(best);
}

}  // namespace detail

/// Certified complex balls around all d roots of a squarefree integer
/// polynomial: Aberth-Ehrlich iteration from perturbed-circle starting points,
/// Newton polish, then Newton-residual disks r_i = d |p(m_i)| / |p'(m_i)|
/// accepted only when pairwise disjoint. Precision doubles until every radius
/// is <= target_radius and certification succeeds. Result sorted by
/// (real part, imaginary part) of the midpoints.
inline std::vector<ComplexBall> find_conjugates(const IntPolynomial& poly, const Real& target_radius,
                                                const RootFindOptions& opts = {}) {
    using namespace detail;
    if (poly.degree() < 1) throw std::invalid_argument("find_conjugates: degree must be >= 1");
    if (!is_squarefree(poly)) throw NonSquarefreeError();
    const long d = poly.degree();

    if (d == 1) {
        Rational root = make_rational(-poly.coeff(0), poly.coeff(1));
        for (Precision p = opts.start_prec;; p *= 2) {
            ComplexBall b = ComplexBall::exact(root, p);
            if (b.radius() <= target_radius) return {b};
            if (p > opts.prec_cap)
                throw PrecisionCapError(opts.prec_cap, "cannot meet target radius for rational root");
        }
    }

    RatPolynomial prat = to_rational(poly);
    Rational centroid = -prat.coeff(d - 1) / (Rational(d) * prat.lc());
    double radius = fujiwara_radius(taylor_shift(prat, centroid));
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;

    std::vector<Cpx> z;
    bool have_points = false;

    for (Precision prec = opts.start_prec; prec <= opts.prec_cap; prec *= 2) {
        std::vector<Cpx> coeffs;
        coeffs.reserve(poly.coeffs().size());
        for (const auto& c : poly.coeffs()) {
            Cpx cc(prec);
            cc.re = Real::of(c, prec);
            coeffs.push_back(cc);
        }

        if (!have_points) {
            z.assign(d, Cpx(prec));
            for (long j = 0; j < d; ++j) {
                double th = 2.0 * M_PI * j / d + 0.7 / d;
                z[j].re = add(Real::of(centroid, prec), Real::of(radius * std::cos(th), prec), prec);
                z[j].im = Real::of(radius * std::sin(th), prec);
            }
            have_points = true;
        } else {
            for (auto& zi : z) {
                zi.re = round_to(zi.re, prec);
                zi.im = round_to(zi.im, prec);
            }
        }

        // Aberth-Ehrlich simultaneous iteration
        const long maxit = 80 + 20 * d;
        Real tol = mul_2si(Real::of(1L, 32), -static_cast<long>(3 * prec / 4), 32);
        for (long it = 0; it < maxit; ++it) {
            Real worst(32);
            for (long i = 0; i < d; ++i) {
                Cpx v(prec), dv(prec);
                eval_with_derivative(coeffs, z[i], prec, v, dv);
                if (cabs(v, prec).is_zero()) continue;
                if (cabs(dv, prec).is_zero()) {
                    z[i].re = add(z[i].re, Real::of(radius * 1e-3, prec), prec);
                    continue;
                }
                Cpx w = cdiv(v, dv, prec);
                Cpx s(prec);
                bool collision = false;
                for (long j = 0; j < d; ++j) {
                    if (j == i) continue;
                    Cpx diff = csub(z[i], z[j], prec);
                    if (cabs(diff, prec).is_zero()) {
                        collision = true;
                        break;
                    }
                    Cpx one(prec);
                    one.re = Real::of(1L, prec);
                    s = cadd(s, cdiv(one, diff, prec), prec);
                }
                if (collision) {
                    z[i].re = add(z[i].re, Real::of(radius * (1e-4 + 1e-5 * i), prec), prec);
                    continue;
                }
                Cpx denom(prec);
                denom.re = sub(Real::of(1L, prec), sub(mul(w.re, s.re, prec), mul(w.im, s.im, prec), prec), prec);
                denom.im = neg(add(mul(w.re, s.im, prec), mul(w.im, s.re, prec), prec), prec);
                Cpx corr = cabs(denom, prec).is_zero() ? w : cdiv(w, denom, prec);
                z[i] = csub(z[i], corr, prec);
                Real rel = div(cabs(corr, 32), add(cabs(z[i], 32), Real::of(1L, 32), 32), 32, MPFR_RNDU);
                if (rel > worst) worst = rel;
            }
            if (worst < tol) break;
        }

        // Newton polish
        for (int round = 0; round < 2; ++round) {
            for (long i = 0; i < d; ++i) {
                Cpx v(prec), dv(prec);
                eval_with_derivative(coeffs, z[i], prec, v, dv);
                if (!cabs(dv, prec).is_zero()) z[i] = csub(z[i], cdiv(v, dv, prec), prec);
            }
        }

        // Certification: residual disks, pairwise disjoint, small enough
        std::vector<ComplexBall> balls;
        balls.reserve(d);
        bool ok = true;
        for (long i = 0; i < d && ok; ++i) {
            ComplexBall m(z[i].re, z[i].im, Real(kRadPrec));
            ComplexBall pv = eval_poly(poly, m);
            ComplexBall pd = eval_poly(poly.derivative(), m);
            Real upper_v = rad::add(pv.mag_upper(), pv.radius());
            Real lower_d = sub(pd.mag_lower(), pd.radius(), kRadPrec, MPFR_RNDD);
            if (lower_d.sign() <= 0) {
                ok = false;
                break;
            }
            Real r = rad::div(rad::mul(Real::of(d, kRadPrec), upper_v), lower_d);
            if (r > target_radius) {
                ok = false;
                break;
            }
            balls.emplace_back(z[i].re, z[i].im, r);
        }
        for (long i = 0; ok && i < d; ++i)
            for (long j = i + 1; ok && j < d; ++j) {
                Real dist = ComplexBall::mid_distance_lower(balls[i], balls[j]);
                if (!(dist > rad::add(balls[i].radius(), balls[j].radius()))) ok = false;
            }
        if (ok) {
            std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
                int c = a.re().cmp(b.re());
                if (c != 0) return c < 0;
                return a.im().cmp(b.im()) < 0;
            });
            return balls;
        }
    }
    throw PrecisionCapError(opts.prec_cap, "root certification failed");
}

}  // namespace shiftlog
