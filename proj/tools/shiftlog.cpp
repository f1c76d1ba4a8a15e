// Command-line front end: measure certification, builtin-table reproduction,
// property verification, and Pade inspection.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "shiftlog/betaspec.hpp"
#include "shiftlog/document.hpp"
#include "shiftlog/measure.hpp"
#include "shiftlog/table.hpp"
#include "shiftlog/verify.hpp"
#include "shiftlog/version.hpp"

namespace {

using namespace shiftlog;

// exit codes: 0 ok, 2 hypothesis failed, 3 lambda not certified positive,
// 4 precision cap, 5 parse error, 1 anything else
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitLambda = 3;
constexpr int kExitPrecisionCap = 4;
constexpr int kExitParse = 5;

int exit_code_for(CertStatus s) {
    switch (s) {
        case CertStatus::ok: return kExitOk;
        case CertStatus::hypothesis_failed: return kExitHypothesis;
        case CertStatus::lambda_not_positive: return kExitLambda;
        case CertStatus::precision_cap: return kExitPrecisionCap;
    }
    return kExitError;
}

struct BetaFlags {
    std::string poly, root, field_poly, field_root, expr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--poly", poly,
                        "minimal polynomial of beta, integer coefficients, constant term first");
        cmd->add_option("--root", root, "root selector: index:K or near:a+bi");
        cmd->add_option("--field-poly", field_poly,
                        "defining polynomial of an auxiliary field (constant term first)");
        cmd->add_option("--field-root", field_root, "generator selector: index:K or near:a+bi");
        cmd->add_option("--expr", expr,
                        "beta as an expression in the generator Y, e.g. \"1000+Y\" or \"Y/(Y-1)\"");
    }

    BetaSpec to_spec() const {
        if (!poly.empty()) {
            if (!field_poly.empty() || !expr.empty())
                throw ParseError("give either --poly or --field-poly/--expr, not both", 0);
            std::optional<RootSelector> sel;
            if (!root.empty()) sel = parse_root_selector(root);
            return BetaSpec::direct(parse_int_poly(poly), sel);
        }
        if (!field_poly.empty()) {
            if (expr.empty()) throw ParseError("--expr is required with --field-poly", 0);
            if (field_root.empty())
                throw ParseError("--field-root is required with --field-poly", 0);
            return BetaSpec::via_field(parse_int_poly(field_poly),
                                       parse_root_selector(field_root), expr);
        }
        throw ParseError("beta is required: --poly or --field-poly/--field-root/--expr", 0);
    }
};

void print_check_line(const CheckResult& c) {
    nlohmann::ordered_json j{{"suite", c.suite},
                             {"check", c.name},
                             {"params", c.params},
                             {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    std::cout << j.dump() << "\n";
}

std::vector<Rational> parse_x_list(const std::string& s) {
    std::vector<Rational> xs;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        xs.push_back(parse_exact_number(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return xs;
}

int cmd_measure(const BetaFlags& bf, const std::string& x_str, double mu_width,
                Precision prec_bits, Precision prec_cap, const std::string& out_path,
                bool no_meta) {
    auto t0 = std::chrono::steady_clock::now();
    Rational x = parse_exact_number(x_str);
    ResolvedBeta rb = resolve_beta(bf.to_spec(), prec_bits, prec_cap);
    CertifyOptions opts;
    opts.start_prec = prec_bits;
    opts.prec_cap = prec_cap;
    opts.mu_rel_width = mu_width;
    MeasureCertificate cert = certify(rb.beta, x, opts);
    cert.beta_input = rb.echo;
    cert.assumes_irreducible = rb.assumes_irreducible;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    nlohmann::ordered_json doc =
        no_meta ? nlohmann::ordered_json{{"schema", "shiftlog-certificate/1"},
                                         {"payload", certificate_payload(cert)}}
                : certificate_document(cert, ms);
    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
    }
    return exit_code_for(cert.status);
}

int cmd_table(int jobs, Precision prec_bits, Precision prec_cap) {
    auto t0 = std::chrono::steady_clock::now();
    auto results = run_table(jobs, prec_bits, prec_cap);
    int npass = 0;
    for (const auto& r : results) {
        bool ok = r.pass;
        npass += ok;
        std::printf("%-4s %-28s x=%-4s printed=%-8s computed=%-10s status=%s\n",
                    ok ? "PASS" : "FAIL", r.row.label.c_str(), to_string(r.row.x).c_str(),
                    r.row.printed.c_str(), r.computed.empty() ? "-" : r.computed.c_str(),
                    to_string(r.cert.status));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%zu rows match the published values (%.2fs)\n", npass, results.size(), secs);
    return npass == static_cast<int>(results.size()) ? kExitOk : kExitError;
}

int cmd_verify(const std::string& suite, const BetaFlags& bf, long n_max, long r_max,
               const std::string& x_list, Precision prec_bits, Precision prec_cap) {
    std::vector<Rational> xs = parse_x_list(x_list);
    std::vector<CheckResult> checks;

    auto resolved = [&] { return resolve_beta(bf.to_spec(), prec_bits, prec_cap); };

    if (suite == "pade" || suite == "all") {
        auto r = suite_pade(n_max > 0 ? std::min(n_max, 100L) : 40, xs);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "perron") {
        ResolvedBeta rb = resolved();
        auto r = suite_perron(rb.beta, rb.echo, xs, n_max > 0 ? n_max : 2000, r_max);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "heights") {
        ResolvedBeta rb = resolved();
        if (rb.beta.degree() != 1)
            throw ParseError("verify heights expects a rational beta (degree 1)", 0);
        Rational b = make_rational(-rb.beta.min_poly().coeff(0), rb.beta.min_poly().coeff(1));
        for (const Rational& x : xs) {
            auto r = suite_heights(b, x, 50, n_max > 0 ? n_max : 200);
            checks.insert(checks.end(), r.begin(), r.end());
        }
    }
    if (suite == "theta") {
        ResolvedBeta rb = resolved();
        if (rb.beta.degree() != 1)
            throw ParseError("verify theta expects a rational beta (degree 1)", 0);
        Rational b = make_rational(-rb.beta.min_poly().coeff(0), rb.beta.min_poly().coeff(1));
        for (const Rational& x : xs) {
            auto r = suite_theta_rate(b, x, n_max > 0 ? n_max : 500);
            checks.insert(checks.end(), r.begin(), r.end());
        }
    }
    if (suite == "exact" || suite == "all") {
        auto r1 = suite_exact_invariants();
        checks.insert(checks.end(), r1.begin(), r1.end());
        auto r2 = suite_kappa_delta(suite == "exact" && n_max > 0 ? n_max : 3000,
                                    {make_rational(1, 3), make_rational(1, 5)});
        checks.insert(checks.end(), r2.begin(), r2.end());
    }
    if (checks.empty())
        throw ParseError("unknown verify suite '" + suite +
                             "' (expected pade|perron|heights|theta|exact|all)",
                         0);

    bool all = true;
    for (const auto& c : checks) {
        print_check_line(c);
        all = all && c.pass;
    }
    return all ? kExitOk : kExitError;
}

int cmd_pade(long n, const std::string& x_str, const std::string& z_str, Precision prec_bits) {
    Rational x = parse_exact_number(x_str);
    PadePair pp = build_explicit(n, x);
    std::cout << "Q = " << poly_to_string(pp.Q, "z") << "\n";
    std::cout << "P = " << poly_to_string(pp.P, "z") << "\n";
    if (z_str.empty()) return kExitOk;

    auto [zre, zim] = parse_complex(z_str);
    if (zim == 0) {
        Rational z = zre;
        Rational qv = eval_poly(pp.Q, z), pv = eval_poly(pp.P, z);
        std::cout << "Q(z) = " << to_string(qv) << "\n";
        std::cout << "P(z) = " << to_string(pv) << "\n";
        if (qv != 0) {
            Rational theta = pv / qv;
            std::cout << "Theta = P(z)/Q(z) = " << to_string(theta) << " ~ "
                      << Real::of(theta, 64).str(17) << "\n";
        }
        if (abs(z) > 1) {
            ComplexBall zb = ComplexBall::exact(z, prec_bits);
            Real err = mul_2si(Real::of(1L, 32), -prec_bits + 16, 32);
            ComplexBall r = eval_R(n, x, zb, err);
            std::cout << "R(z) in " << r.re().str(17) << " + " << r.im().str(17) << " i +- "
                      << r.radius().str(5) << "\n";
            ComplexBall f = eval_f(x, zb, err);
            std::cout << "f(z) in " << f.re().str(17) << " + " << f.im().str(17) << " i +- "
                      << f.radius().str(5) << "\n";
            if (qv != 0) {
                ComplexBall gap = f - ComplexBall::exact(pv / qv, prec_bits);
                std::cout << "|f(z) - Theta| <= "
                          << add(hypot(gap.re(), gap.im(), 32, MPFR_RNDU), gap.radius(), 32,
                                 MPFR_RNDU)
                                 .str(5)
                          << "\n";
            }
        }
    } else {
        ComplexBall zb = ComplexBall::exact(zre, zim, prec_bits);
        ComplexBall qv = eval_poly(pp.Q, zb), pv = eval_poly(pp.P, zb);
        std::cout << "Q(z) in " << qv.re().str(17) << " + " << qv.im().str(17) << " i +- "
                  << qv.radius().str(5) << "\n";
        std::cout << "P(z) in " << pv.re().str(17) << " + " << pv.im().str(17) << " i +- "
                  << pv.radius().str(5) << "\n";
        if (zb.abs_interval().lo() > Real::of(1L, 32)) {
            Real err = mul_2si(Real::of(1L, 32), -prec_bits + 16, 32);
            ComplexBall r = eval_R(n, x, zb, err);
            std::cout << "R(z) in " << r.re().str(17) << " + " << r.im().str(17) << " i +- "
                      << r.radius().str(5) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effective K-approximation measures for shifted logarithms of algebraic numbers"};
    app.set_version_flag("--version", std::string(shiftlog::kToolName) + " " +
                                          std::string(shiftlog::kToolVersion));
    app.set_config("--config", "", "read flags from a config file");
    app.require_subcommand(1);

    Precision prec_bits = 256, prec_cap = 16384;
    app.add_option("--precision-bits", prec_bits, "starting working precision")
        ->capture_default_str();
    app.add_option("--precision-cap", prec_cap, "maximum working precision")
        ->capture_default_str();

    auto* measure = app.add_subcommand("measure", "certify an approximation-measure bound");
    BetaFlags mb;
    mb.attach(measure);
    std::string m_x = "0", m_out;
    double mu_width = 1e-4;
    bool no_meta = false;
    measure->add_option("--x", m_x, "shift x in [0,1), e.g. 0, 1/3")->capture_default_str();
    measure->add_option("--mu-width", mu_width, "relative width target for the mu interval")
        ->capture_default_str();
    measure->add_option("--out", m_out, "write the certificate document to a file ('-' = stdout)");
    measure->add_flag("--no-meta", no_meta, "omit the non-deterministic meta section");

    auto* table = app.add_subcommand("table", "recompute the published examples table");
    int jobs = 1;
    table->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run property-verification suites");
    std::string suite, v_x = "0,1/3,1/5,2/7";
    long v_nmax = 0, v_rmax = 4096;
    BetaFlags vb;
    verify->add_option("suite", suite, "pade|perron|heights|theta|exact|all")->required();
    vb.attach(verify);
    verify->add_option("--nmax", v_nmax, "maximum n (suite-specific default when 0)");
    verify->add_option("--rmax", v_rmax, "largest n = 2^j for the remainder rate")
        ->capture_default_str();
    verify->add_option("--x", v_x, "comma-separated shifts")->capture_default_str();

    auto* pade = app.add_subcommand("pade", "print exact Pade data of weight n");
    long p_n = 1;
    std::string p_x = "0", p_z;
    pade->add_option("--n", p_n, "weight")->required();
    pade->add_option("--x", p_x, "shift")->capture_default_str();
    pade->add_option("--z", p_z, "optional evaluation point (rational or a+bi)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*measure) return cmd_measure(mb, m_x, mu_width, prec_bits, prec_cap, m_out, no_meta);
        if (*table) return cmd_table(jobs, prec_bits, prec_cap);
        if (*verify) return cmd_verify(suite, vb, v_nmax, v_rmax, v_x, prec_bits, prec_cap);
        if (*pade) return cmd_pade(p_n, p_x, p_z, prec_bits);
    } catch (const shiftlog::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const shiftlog::PrecisionCapError& e) {
        std::cerr << "precision cap: " << e.what() << "\n";
        return kExitPrecisionCap;
    } catch (const shiftlog::HypothesisError& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
