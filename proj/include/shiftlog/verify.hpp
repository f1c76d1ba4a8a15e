#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shiftlog/arith.hpp"
#include "shiftlog/asymptotics.hpp"
#include "shiftlog/measure.hpp"
#include "shiftlog/pade.hpp"

namespace shiftlog {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string params;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

inline std::string xs_string(const std::vector<Rational>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + to_string(x);
    return s;
}

}  // namespace detail

/// Exact Pade properties over a parameter grid: recurrence/explicit equality,
/// Pade order, determinant nonvanishing, coefficient integrality (with the
/// minimal clearing factor observed), degree and leading-coefficient laws.
inline std::vector<CheckResult> suite_pade(long n_max, const std::vector<Rational>& xs) {
    std::vector<CheckResult> out;
    std::string grid = "nmax=" + std::to_string(n_max) + " x=" + detail::xs_string(xs);

    bool eq_ok = true, order_ok = true, det_ok = true, integ_ok = true, lead_ok = true;
    std::string eq_detail, integ_detail;
    // largest ratio (den nu_n d_n) / (actual lcm of coefficient denominators)
    Rational worst_overshoot(1);

    for (const Rational& x : xs) {
        RatPolynomial z = RatPolynomial::identity();
        PadePair cur = build_explicit(1, x), prev = build_explicit(0, x);
        for (long n = 0; n <= n_max; ++n) {
            PadePair e = n == 0 ? prev : (n == 1 ? cur : PadePair{});
            if (n >= 2) {
                auto rc = recurrence_coeffs(n - 1, x);
                e.n = n;
                e.x = x;
                e.Q = step_recurrence(prev.Q, cur.Q, rc, z);
                e.P = step_recurrence(prev.P, cur.P, rc, z);
                PadePair ex = build_explicit(n, x);
                if (!(e.Q == ex.Q && e.P == ex.P)) {
                    eq_ok = false;
                    eq_detail = "mismatch at n=" + std::to_string(n) + " x=" + to_string(x);
                }
                prev = std::move(cur);
                cur = e;
            }
            if (!pade_order_check(n, x)) {
                order_ok = false;
            }
            if (n <= n_max && determinant_check(n, x).is_zero()) det_ok = false;
            if (e.Q.degree() != n ||
                !(e.Q.lc() == pochhammer(n + 1 + x, n) / Rational(factorial(n))))
                lead_ok = false;
            if (n >= 1) {
                BigInt m = den(x) * nu_n(x, n) * d_n(x, n);
                BigInt actual = 1;
                for (const auto& c : e.Q.coeffs()) actual = lcm_int(actual, den(c));
                for (const auto& c : e.P.coeffs()) actual = lcm_int(actual, den(c));
                if (!divides(actual, m)) {
                    integ_ok = false;
                    integ_detail = "denominator " + to_string(actual) + " not cleared at n=" +
                                   std::to_string(n) + " x=" + to_string(x);
                } else {
                    Rational overshoot = make_rational(m, actual);
                    if (overshoot > worst_overshoot) worst_overshoot = overshoot;
                }
            }
        }
    }
    out.push_back({"pade", "recurrence-explicit-equality", grid, eq_ok, eq_detail});
    out.push_back({"pade", "order-check", grid, order_ok, ""});
    out.push_back({"pade", "determinant-nonzero", grid, det_ok, ""});
    out.push_back({"pade", "degree-and-leading-coefficient", grid, lead_ok, ""});
    out.push_back({"pade", "coefficient-integrality", grid, integ_ok,
                   integ_ok ? "max clearing overshoot factor " + to_string(worst_overshoot)
                            : integ_detail});
    return out;
}

/// kappa_n(beta) Q_n(beta), kappa_n(beta) P_n(beta) are integers for integer beta.
inline std::vector<CheckResult> suite_integrality_at_integers(long n_max,
                                                              const std::vector<Rational>& xs,
                                                              const std::vector<BigInt>& betas) {
    std::vector<CheckResult> out;
    for (const BigInt& b : betas) {
        bool ok = true;
        std::string detail;
        for (const Rational& x : xs) {
            Rational z(b);
            auto [q0, q1] = q_seeds(x, z);
            auto [p0, p1] = p_seeds(x, z);
            for (long n = 1; n <= n_max; ++n) {
                BigInt k = kappa_n(1, x, n);  // den(beta)=1 for integer beta
                Rational qv = n == 1 ? q1 : q0;
                Rational pv = n == 1 ? p1 : p0;
                if (n >= 2) {
                    auto rc = recurrence_coeffs(n - 1, x);
                    qv = step_recurrence(q0, q1, rc, z);
                    pv = step_recurrence(p0, p1, rc, z);
                    q0 = std::exchange(q1, qv);
                    p0 = std::exchange(p1, pv);
                }
                if (!is_integer(Rational(k * qv)) || !is_integer(Rational(k * pv))) {
                    ok = false;
                    detail = "not integral at beta=" + to_string(b) + " n=" + std::to_string(n) +
                             " x=" + to_string(x);
                }
            }
        }
        out.push_back({"integrality", "kappa-clears-values",
                       "beta=" + to_string(b) + " nmax=" + std::to_string(n_max) + " x=" +
                           detail::xs_string(xs),
                       ok, detail});
    }
    return out;
}

/// Perron/Pituk rate verification for one beta.
inline std::vector<CheckResult> suite_perron(const AlgebraicNumber& beta, const std::string& label,
                                             const std::vector<Rational>& xs, long n_max,
                                             long r_n_max = 4096, double q_threshold = 0.02,
                                             double r_threshold = 0.03) {
    std::vector<CheckResult> out;
    for (const Rational& x : xs) {
        PerronReport rep = perron_report(beta, x, n_max, r_n_max);
        for (size_t k = 0; k < rep.per_conjugate.size(); ++k) {
            const auto& c = rep.per_conjugate[k];
            std::string params = "beta=" + label + " conj=" + std::to_string(k) + " x=" +
                                 to_string(x) + " nmax=" + std::to_string(n_max);
            bool qp = c.q_deviation <= q_threshold, pp = c.p_deviation <= q_threshold;
            out.push_back({"perron", "q-rate-matches-log-rho2", params, qp,
                           "rate=" + detail::fmt_double(c.q_rate.value) + " expect=" +
                               detail::fmt_double(c.log_rho2.mid().to_double()) + " dev=" +
                               detail::fmt_double(c.q_deviation)});
            out.push_back({"perron", "p-rate-matches-log-rho2", params, pp,
                           "dev=" + detail::fmt_double(c.p_deviation)});
        }
        bool rp = rep.r_deviation <= r_threshold;
        out.push_back({"perron", "remainder-rate-matches-log-rho1",
                       "beta=" + label + " x=" + to_string(x) + " n=2^j<=" + std::to_string(r_n_max),
                       rp,
                       "rate=" + detail::fmt_double(rep.r_rate.value) + " expect=" +
                           detail::fmt_double(rep.log_rho1_selected.mid().to_double()) + " dev=" +
                           detail::fmt_double(rep.r_deviation)});
    }
    return out;
}

namespace detail {

/// Exact rational Theta_n = P_n(z)/Q_n(z) along the recurrence, d = 1 case.
struct ThetaIterator {
    Rational z, x;
    Rational q0, q1, p0, p1;
    long n = 1;
    explicit ThetaIterator(const Rational& z_, const Rational& x_) : z(z_), x(x_) {
        std::tie(q0, q1) = q_seeds(x, z);
        std::tie(p0, p1) = p_seeds(x, z);
    }
    void advance() {  // moves to n+1
        auto rc = recurrence_coeffs(n, x);
        Rational q2 = step_recurrence(q0, q1, rc, z);
        Rational p2 = step_recurrence(p0, p1, rc, z);
        q0 = std::exchange(q1, q2);
        p0 = std::exchange(p1, p2);
        ++n;
    }
    Rational theta() const { return p1 / q1; }
};

}  // namespace detail

/// Height growth of Theta_n for rational beta: h(Theta_n)/n <= log Q / d + slack
/// over a window of n.
inline std::vector<CheckResult> suite_heights(const Rational& beta, const Rational& x, long n_lo,
                                              long n_hi, double slack = 0.05) {
    std::vector<CheckResult> out;
    AlgebraicNumber b = AlgebraicNumber::create(
        IntPolynomial({-num(beta), den(beta)}), RootSelector::by_index(0));
    CertifyOptions copts;
    auto cert = certify(b, x, copts);
    std::string params = "beta=" + to_string(beta) + " x=" + to_string(x) + " n=" +
                         std::to_string(n_lo) + ".." + std::to_string(n_hi);
    if (cert.status != CertStatus::ok && !cert.log_Q.has_value()) {
        out.push_back({"heights", "h-theta-bounded-by-logQ", params, false,
                       std::string("certification failed: ") + to_string(cert.status)});
        return out;
    }
    double bound = cert.log_Q->lo().to_double() / static_cast<double>(cert.degree) + slack;
    detail::ThetaIterator it(beta, x);
    double worst = -1e300;
    long worst_n = 0;
    bool ok = true;
    for (long n = 1; n <= n_hi; ++n) {
        if (n >= 2) it.advance();
        if (n < n_lo) continue;
        Rational th = it.theta();
        double h = height_rational(th).hi().to_double() / static_cast<double>(n);
        if (h > worst) {
            worst = h;
            worst_n = n;
        }
        if (h > bound) ok = false;
    }
    out.push_back({"heights", "h-theta-bounded-by-logQ", params, ok,
                   "max h(Theta_n)/n = " + detail::fmt_double(worst) + " at n=" +
                       std::to_string(worst_n) + ", bound " + detail::fmt_double(bound)});
    return out;
}

/// Convergence rate of Theta_n to f(beta) for rational beta:
/// (log |f(beta) - Theta_n|)/n compared against -log E.
inline std::vector<CheckResult> suite_theta_rate(const Rational& beta, const Rational& x, long n,
                                                 double threshold = 0.03) {
    std::vector<CheckResult> out;
    ComplexBall zb = ComplexBall::exact(beta, 64);
    CharRoots cr = char_roots(zb.round_to_prec(256));
    double log_E = 2.0 * log_interval(cr.rho2).mid().to_double();
    // precision for f: the gap is ~ E^-n, keep plenty of headroom
    long bits = static_cast<long>(static_cast<double>(n) * log_E / std::log(2.0)) + 256;
    ComplexBall zf = ComplexBall::exact(beta, bits);
    ComplexBall f = eval_f(x, zf, mul_2si(Real::of(1L, 32), -bits + 32, 32));

    detail::ThetaIterator it(beta, x);
    for (long k = 2; k <= n; ++k) it.advance();
    Rational th = it.theta();
    ComplexBall diff = f - ComplexBall::exact(th, bits);
    Real m = hypot(diff.re(), diff.im(), 64);
    double rate = log(m, 64).to_double() / static_cast<double>(n);
    double dev = rel_dev(rate, -log_E);
    out.push_back({"theta", "convergence-rate-is-minus-logE",
                   "beta=" + to_string(beta) + " x=" + to_string(x) + " n=" + std::to_string(n),
                   dev <= threshold,
                   "rate=" + detail::fmt_double(rate) + " expect=" + detail::fmt_double(-log_E) +
                       " dev=" + detail::fmt_double(dev)});
    return out;
}

/// Soft monitor: (log kappa_n)/n against log Delta (den(beta)=1).
inline std::vector<CheckResult> suite_kappa_delta(long n, const std::vector<Rational>& xs,
                                                  double rel_threshold = 0.15) {
    std::vector<CheckResult> out;
    for (const Rational& x : xs) {
        BigInt k = kappa_n(1, x, n);
        double log_k = log(Real::of(k, 256), 256).to_double() / static_cast<double>(n);
        double log_delta = compute_Delta(1, x).log_value(128).mid().to_double();
        double dev = std::abs(log_k - log_delta);
        out.push_back({"exact", "kappa-growth-matches-logDelta",
                       "x=" + to_string(x) + " n=" + std::to_string(n),
                       dev <= rel_threshold * log_delta,
                       "log kappa_n/n = " + detail::fmt_double(log_k) + ", log Delta = " +
                           detail::fmt_double(log_delta) + ", |dev| = " + detail::fmt_double(dev) +
                           ", allowed " + detail::fmt_double(rel_threshold * log_delta)});
    }
    return out;
}

/// Cheap exact invariants of the arithmetic module.
inline std::vector<CheckResult> suite_exact_invariants() {
    std::vector<CheckResult> out;
    bool lcm_ok = true;
    BigInt l = 1;
    for (long n = 1; n <= 100; ++n) {
        l = lcm_int(l, n);
        if (d_n(Rational(0), n) != l) lcm_ok = false;
    }
    out.push_back({"exact", "d_n-at-zero-equals-lcm", "n<=100", lcm_ok, ""});

    bool nu_ok = true;
    for (const Rational& x : {make_rational(1, 3), make_rational(1, 5)}) {
        double log_nu = nu(x).log_value(128).mid().to_double();
        for (long n : {100L, 400L}) {
            double log_nun = log(Real::of(nu_n(x, n), 256), 256).to_double() / n;
            if (std::abs(log_nun - log_nu) > 2.0 * std::log(den(x).get_d()) / n) nu_ok = false;
        }
    }
    out.push_back({"exact", "nu_n-tracks-nu", "x=1/3,1/5 n=100,400", nu_ok, ""});
    return out;
}

}  // namespace shiftlog
