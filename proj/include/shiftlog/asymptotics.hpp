#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "shiftlog/numfield.hpp"
#include "shiftlog/pade.hpp"

namespace shiftlog {

/// Roots of the characteristic polynomial X^2 - 2(2z-1)X + 1 at a point z,
/// with their moduli sorted rho1 <= rho2. `distinct` certifies that the two
/// modulus intervals are separated at this precision; when they overlap
/// (the degenerate z in [0,1] case, or insufficient precision) it is false.
struct CharRoots {
    ComplexBall z;
    ComplexBall lambda1, lambda2;  // |lambda1| <= |lambda2| by interval order
    RealInterval rho1, rho2;
    bool distinct;
};

inline CharRoots char_roots(const ComplexBall& z) {
    ComplexBall half_w = z.scaled(Rational(2)) - ComplexBall::exact(1L, z.prec());  // 2z-1
    ComplexBall disc = half_w * half_w - ComplexBall::exact(1L, z.prec());
    ComplexBall s = disc.sqrt_any_branch();
    ComplexBall l1 = half_w - s, l2 = half_w + s;
    RealInterval r1 = l1.abs_interval(), r2 = l2.abs_interval();
    if (r1.mid() > r2.mid()) {
        std::swap(l1, l2);
        std::swap(r1, r2);
    }
    bool distinct = r1.hi() < r2.lo();
    return {z, l1, l2, r1, r2, distinct};
}

struct PrecisionExhaustedError : std::runtime_error {
    PrecisionExhaustedError(long n, const std::string& msg)
        : std::runtime_error(msg + " at n = " + std::to_string(n)), n_failed(n) {}
    long n_failed;
};

/// Iterate the order-2 recurrence in ball arithmetic at fixed precision and
/// record log|X_n| (midpoint) at every sampled index. Aborts when any ball's
/// relative radius exceeds 2^-10.
inline std::vector<std::pair<long, double>> run_recurrence(
    const Rational& x, const ComplexBall& z, std::pair<ComplexBall, ComplexBall> seeds, long n_max,
    Precision precision_bits, long stride = 1) {
    if (n_max < 2) throw std::invalid_argument("run_recurrence: n_max must be >= 2");
    if (stride <= 0) stride = 1;
    ComplexBall zz = z.round_to_prec(precision_bits);
    ComplexBall prev = seeds.first.round_to_prec(precision_bits);
    ComplexBall cur = seeds.second.round_to_prec(precision_bits);
    std::vector<std::pair<long, double>> samples;
    auto log_mid = [](const ComplexBall& b) {
        Real m = hypot(b.re(), b.im(), 64);
        if (m.is_zero()) return -std::numeric_limits<double>::infinity();
        return log(m, 64).to_double();
    };
    auto check = [&](const ComplexBall& b, long n) {
        Real m = b.mag_upper();
        if (m.is_zero()) return;
        if (b.radius() > mul_2si(m, -10, kRadPrec, MPFR_RNDD))
            throw PrecisionExhaustedError(n, "ball radius exceeded 2^-10 relative");
    };
    samples.emplace_back(0, log_mid(prev));
    samples.emplace_back(1, log_mid(cur));
    for (long n = 1; n < n_max; ++n) {
        ComplexBall next = step_recurrence(prev, cur, recurrence_coeffs(n, x), zz);
        prev = std::move(cur);
        cur = std::move(next);
        check(cur, n + 1);
        if ((n + 1) % stride == 0) samples.emplace_back(n + 1, log_mid(cur));
    }
    return samples;
}

/// Growth-rate estimate from (n, log|X_n|) samples: mean per-step difference
/// over the trailing half-window; residual = spread of the per-step ratios.
struct RateEstimate {
    double value;
    std::pair<long, long> window;
    double residual;
};

inline RateEstimate growth_rate(const std::vector<std::pair<long, double>>& samples,
                                size_t min_samples = 16) {
    if (samples.size() < std::max<size_t>(min_samples, 3))
        throw std::invalid_argument("growth_rate: too few samples");
    size_t start = samples.size() / 2;
    double sum = 0;
    double mx = -std::numeric_limits<double>::infinity(), mn = -mx;
    long cnt = 0;
    for (size_t i = start; i + 1 < samples.size(); ++i) {
        double dn = static_cast<double>(samples[i + 1].first - samples[i].first);
        double d = (samples[i + 1].second - samples[i].second) / dn;
        sum += d;
        mx = std::max(mx, d);
        mn = std::min(mn, d);
        ++cnt;
    }
    if (cnt == 0) throw std::invalid_argument("growth_rate: empty window");
    return {sum / cnt, {samples[start].first, samples.back().first}, mx - mn};
}

inline double rel_dev(double value, double expected) {
    return std::abs(value / expected - 1.0);
}

/// run_recurrence with precision escalation on radius blow-up. Mid-rad radii
/// in a linear recurrence compound at the sum-of-|coefficients| rate, which
/// exceeds rho2 for small |z|, so the heuristic starting precision can run
/// out before n_max; doubling is always sufficient eventually.
inline std::pair<std::vector<std::pair<long, double>>, Precision> run_recurrence_auto(
    const Rational& x, const ComplexBall& z, bool q_solution, long n_max, Precision start_prec,
    Precision cap = 1 << 20) {
    for (Precision prec = start_prec; prec <= cap; prec *= 2) {
        try {
            ComplexBall zz = z.round_to_prec(prec);
            auto seeds = q_solution ? q_seeds(x, zz) : p_seeds(x, zz);
            return {run_recurrence(x, zz, seeds, n_max, prec), prec};
        } catch (const PrecisionExhaustedError&) {
            continue;
        }
    }
    throw PrecisionExhaustedError(n_max, "precision cap reached in run_recurrence_auto");
}

/// Per-conjugate comparison of empirical recurrence growth against the
/// char_roots prediction, plus the remainder rate at the selected embedding
/// measured from direct series evaluation on a geometric schedule n = 2^j.
struct ConjugateRateReport {
    ComplexBall conjugate;
    RealInterval log_rho2;
    RateEstimate q_rate, p_rate;
    double q_deviation, p_deviation;  // |rate / log rho2 - 1|
};

struct PerronReport {
    std::vector<ConjugateRateReport> per_conjugate;
    RealInterval log_rho1_selected;
    RateEstimate r_rate;
    double r_deviation;
    long n_max;
    Precision precision_bits = 0;
};

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Precision default_run_precision(long n_max, double log2_rho2) {
    double bits = 64.0 + 0.1 * static_cast<double>(n_max) * std::max(0.0, log2_rho2);
    return static_cast<Precision>(bits) + 64;
}

inline PerronReport perron_report(AlgebraicNumber beta, const Rational& x, long n_max,
                                  long r_n_max = 4096) {
    if (count_roots_in_unit_interval(beta.min_poly()) != 0)
        throw HypothesisError("a conjugate lies in [0,1]: rho1 = rho2 there, rates undefined");
    if (!(beta.selected().abs_interval().lo() > Real::of(1L, kRadPrec)))
        throw HypothesisError("|beta| > 1 is not certified");

    // make sure rho1 < rho2 is separated at every conjugate before running
    std::vector<CharRoots> crs;
    for (int attempt = 0;; ++attempt) {
        crs.clear();
        bool all_distinct = true;
        for (const auto& conj : beta.conjugates()) {
            crs.push_back(char_roots(conj));
            all_distinct = all_distinct && crs.back().distinct;
        }
        if (all_distinct) break;
        if (attempt >= 6) throw HypothesisError("rho1, rho2 indistinct at precision cap");
        beta = beta.refined();
    }

    PerronReport rep;
    rep.n_max = n_max;
    for (size_t k = 0; k < beta.conjugates().size(); ++k) {
        const CharRoots& cr = crs[k];
        double l2r2 = std::max(1e-6, std::log2(std::max(1.0, cr.rho2.mid().to_double())));
        Precision prec = default_run_precision(n_max, l2r2);
        RateEstimate qr{}, pr{};
        for (int attempt = 0;; ++attempt) {
            try {
                ComplexBall zz = beta.conjugates()[k].round_to_prec(prec);
                qr = growth_rate(run_recurrence(x, zz, q_seeds(x, zz), n_max, prec));
                pr = growth_rate(run_recurrence(x, zz, p_seeds(x, zz), n_max, prec));
                break;
            } catch (const PrecisionExhaustedError&) {
                if (attempt >= 12) throw;
                prec *= 2;
                // the conjugate ball's own radius must shrink along with the
                // working precision, or it dominates the radius growth
                while (beta.prec() < 2 * prec) beta = beta.refined();
            }
        }
        rep.precision_bits = std::max(rep.precision_bits, prec);
        RealInterval lr2 = log_interval(cr.rho2);
        double expect = lr2.mid().to_double();
        rep.per_conjugate.push_back(
            {beta.conjugates()[k], lr2, qr, pr, rel_dev(qr.value, expect), rel_dev(pr.value, expect)});
    }

    // remainder rate at the selected embedding from the direct series. The
    // series cancels exponentially for complex z, so precision escalates until
    // each ball is relatively tight enough for its midpoint to carry the rate.
    const CharRoots& crsel = crs[static_cast<size_t>(beta.selected_index())];
    rep.log_rho1_selected = log_interval(crsel.rho1);
    Precision rp = 256;
    std::vector<std::pair<long, double>> rs;
    for (long n = 1; n <= r_n_max; n *= 2) {
        // |R_n| ~ rho1^n / sqrt(n); ask the series for a tail well below that scale
        Real expo = mul(Real::of(n, 64), rep.log_rho1_selected.mid(), 64);
        Real err = mul_2si(exp(expo, 64), -64, 64);
        for (;;) {
            while (beta.prec() < 2 * rp) beta = beta.refined();
            ComplexBall zb = beta.selected().round_to_prec(rp);
            ComplexBall r = eval_R(n, x, zb, err);
            Real m = hypot(r.re(), r.im(), 64);
            if (m.is_zero()) {
                rs.emplace_back(n, -1e18);
                break;
            }
            if (r.radius() <= mul_2si(round_to(m, kRadPrec, MPFR_RNDD), -16, kRadPrec, MPFR_RNDD)) {
                rs.emplace_back(n, log(m, 64).to_double());
                break;
            }
            if (rp > (1L << 20)) throw PrecisionExhaustedError(n, "remainder series never tightened");
            rp *= 2;
        }
    }
    rep.r_rate = growth_rate(rs, 8);
    rep.r_deviation = rel_dev(rep.r_rate.value, rep.log_rho1_selected.mid().to_double());
    return rep;
}

}  // namespace shiftlog
