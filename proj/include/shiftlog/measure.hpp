#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlog/arith.hpp"
#include "shiftlog/asymptotics.hpp"
#include "shiftlog/logconst.hpp"
#include "shiftlog/numfield.hpp"

namespace shiftlog {

struct HypothesisFlags {
    bool abs_beta_gt1 = false;
    bool x_in_range = false;
    bool rho_distinct_all_conjugates = false;
    bool lambda_positive = false;
};

enum class CertStatus { ok, hypothesis_failed, lambda_not_positive, precision_cap };

inline const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::ok: return "ok";
        case CertStatus::hypothesis_failed: return "hypothesis_failed";
        case CertStatus::lambda_not_positive: return "lambda_not_positive";
        case CertStatus::precision_cap: return "precision_cap";
    }
    return "?";
}

/// Full audit record of one measure computation.
struct MeasureCertificate {
    std::string beta_input;         // echo of how beta was specified
    IntPolynomial min_poly;         // minimal polynomial of beta (primitive)
    ComplexBall selected_root;
    bool assumes_irreducible = false;  // true when min_poly irreducibility was not derived
    Rational x;
    long degree = 0;                // d = [Q(beta):Q]
    Rational delta;                 // d if K real, d/2 otherwise
    BigInt den_beta;
    LogExactConstant Delta;
    std::vector<RealInterval> rho2;      // per conjugate, canonical order
    std::optional<RealInterval> log_Q, log_E, lambda, mu;
    HypothesisFlags flags;
    Precision precision_bits = 0;
    CertStatus status = CertStatus::ok;
    std::string message;
};

/// delta of the main theorem: d when the selected embedding is real, d/2
/// otherwise; decided by exact reality certification of the selected root,
/// escalating precision as needed.
inline Rational compute_delta_degree(AlgebraicNumber& beta, Precision prec_cap = 16384) {
    for (;;) {
        auto r = certified_real(beta.min_poly(), beta.selected());
        if (r.has_value())
            return *r ? Rational(beta.degree()) : make_rational(beta.degree(), 2);
        if (beta.prec() * 2 > prec_cap)
            throw PrecisionCapError(prec_cap, "reality of the selected root undecided");
        beta = beta.refined();
    }
}

/// Delta = den(beta) * exp(den(x)/phi(den(x))) * nu(x), exactly.
inline LogExactConstant compute_Delta(const BigInt& den_beta, const Rational& x) {
    require_shift_range(x);
    BigInt dx = den(x);
    LogExactConstant expo(Rational(1), make_rational(dx, euler_phi(dx)), {});
    return LogExactConstant::of(Rational(den_beta)) * expo * nu(x);
}

/// Exact/certified hypothesis checks of the main theorem.
inline HypothesisFlags check_hypotheses(const AlgebraicNumber& beta, const Rational& x) {
    HypothesisFlags f;
    f.x_in_range = (x >= 0 && x < 1);
    f.rho_distinct_all_conjugates = count_roots_in_unit_interval(beta.min_poly()) == 0;
    f.abs_beta_gt1 = beta.selected().abs_interval().lo() > Real::of(1L, kRadPrec);
    return f;
}

/// lambda = 1/delta - log Q / (d log E) and mu = 1/lambda, as outward
/// intervals, from the per-conjugate rho2 intervals.
inline std::pair<RealInterval, RealInterval> compute_lambda_mu(
    const Rational& delta, const LogExactConstant& Delta, const std::vector<RealInterval>& rho2,
    int selected_index, long degree, Precision prec) {
    RealInterval logQ = Delta.log_value(prec);
    for (const auto& r : rho2) logQ = logQ + log_interval(r);
    RealInterval logE = log_interval(rho2[selected_index]).scaled(Rational(2));
    RealInterval lambda = RealInterval::of(Rational(1) / delta, prec) -
                          logQ / logE.scaled(Rational(degree));
    RealInterval mu = RealInterval::of(Rational(1), prec) / lambda;  // caller checks positivity
    return {lambda, mu};
}

struct CertifyOptions {
    Precision start_prec = 256;
    Precision prec_cap = 16384;
    double mu_rel_width = 1e-4;          // relative width target for mu
    std::optional<double> mu_abs_width;  // absolute target overrides when set
};

/// Run the whole pipeline: conjugate certification, hypothesis checks, Delta,
/// per-conjugate rho2, lambda and mu, escalating precision until the mu
/// interval is tight enough. Failures are distinct terminal statuses.
inline MeasureCertificate certify(const AlgebraicNumber& beta0, const Rational& x,
                                  const CertifyOptions& opts = {}) {
    MeasureCertificate cert;
    cert.min_poly = beta0.min_poly();
    cert.x = x;
    cert.degree = beta0.degree();
    cert.selected_root = beta0.selected();
    cert.precision_bits = beta0.prec();

    cert.flags.x_in_range = (x >= 0 && x < 1);
    cert.flags.rho_distinct_all_conjugates = count_roots_in_unit_interval(beta0.min_poly()) == 0;
    if (!cert.flags.x_in_range || !cert.flags.rho_distinct_all_conjugates) {
        cert.status = CertStatus::hypothesis_failed;
        cert.message = !cert.flags.x_in_range
                           ? "x outside [0,1)"
                           : "a conjugate of beta lies in [0,1] (rho1 = rho2 at that embedding)";
        return cert;
    }

    AlgebraicNumber beta = beta0;
    cert.den_beta = den_algebraic(beta.min_poly());
    cert.Delta = compute_Delta(cert.den_beta, x);

    // |beta| > 1 must certify; a conjugate exactly on the unit circle never will
    while (!(beta.selected().abs_interval().lo() > Real::of(1L, kRadPrec))) {
        if (beta.selected().abs_interval().hi() < Real::of(1L, kRadPrec)) {
            cert.flags.abs_beta_gt1 = false;
            cert.status = CertStatus::hypothesis_failed;
            cert.message = "|beta| < 1";
            cert.selected_root = beta.selected();
            return cert;
        }
        if (beta.prec() * 2 > opts.prec_cap) {
            cert.status = CertStatus::precision_cap;
            cert.message = "cannot certify |beta| > 1 (is |beta| = 1 exactly?)";
            cert.selected_root = beta.selected();
            return cert;
        }
        beta = beta.refined();
    }
    cert.flags.abs_beta_gt1 = true;

    try {
        cert.delta = compute_delta_degree(beta, opts.prec_cap);
    } catch (const PrecisionCapError& e) {
        cert.status = CertStatus::precision_cap;
        cert.message = e.what();
        return cert;
    }

    for (;;) {
        cert.precision_bits = beta.prec();
        cert.selected_root = beta.selected();
        bool distinct = true;
        std::vector<RealInterval> rho2;
        rho2.reserve(beta.conjugates().size());
        for (const auto& conj : beta.conjugates()) {
            CharRoots cr = char_roots(conj);
            distinct = distinct && cr.distinct && cr.rho2.lo() > Real::of(1L, kRadPrec);
            rho2.push_back(cr.rho2);
        }
        if (distinct) {
            cert.rho2 = rho2;
            auto [lambda, mu] = compute_lambda_mu(cert.delta, cert.Delta, rho2,
                                                  beta.selected_index(), cert.degree, beta.prec());
            cert.log_Q = cert.Delta.log_value(beta.prec());
            for (const auto& r : rho2) cert.log_Q = *cert.log_Q + log_interval(r);
            cert.log_E = log_interval(rho2[beta.selected_index()]).scaled(Rational(2));
            cert.lambda = lambda;
            if (lambda.hi().sign() <= 0) {
                cert.flags.lambda_positive = false;
                cert.status = CertStatus::lambda_not_positive;
                cert.message = "lambda <= 0: condition (1/delta - log Q / (d log E)) > 0 fails";
                return cert;
            }
            if (lambda.lo().sign() > 0) {
                cert.flags.lambda_positive = true;
                cert.mu = mu;
                Real w = mu.width();
                bool tight;
                if (opts.mu_abs_width.has_value()) {
                    tight = w.to_double() <= *opts.mu_abs_width;
                } else {
                    tight = w.to_double() <= opts.mu_rel_width * std::abs(mu.mid().to_double());
                }
                if (tight) {
                    cert.status = CertStatus::ok;
                    return cert;
                }
            }
            // lambda interval straddles 0, or mu too wide: refine
        }
        if (beta.prec() * 2 > opts.prec_cap) {
            cert.status = CertStatus::precision_cap;
            cert.message = distinct ? "mu width target unreachable at precision cap"
                                    : "rho intervals indistinct at precision cap";
            return cert;
        }
        beta = beta.refined();
    }
}

}  // namespace shiftlog
