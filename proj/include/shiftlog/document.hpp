#pragma once

#include <json.hpp>

#include <string>

#include "shiftlog/measure.hpp"
#include "shiftlog/version.hpp"

namespace shiftlog {

/// Decimal string with enough digits to reconstruct the value exactly at its
/// recorded binary precision (ceil(p log10 2) + 2 digits).
inline std::string exact_decimal(const Real& v) {
    size_t digits = static_cast<size_t>(static_cast<double>(v.prec()) * 0.30103) + 3;
    return v.str(digits);
}

inline nlohmann::ordered_json interval_json(const RealInterval& iv) {
    return {exact_decimal(iv.lo()), exact_decimal(iv.hi())};
}

inline nlohmann::ordered_json ball_json(const ComplexBall& b) {
    return {{"re", exact_decimal(b.re())},
            {"im", exact_decimal(b.im())},
            {"radius", exact_decimal(b.radius())},
            {"prec_bits", static_cast<long>(b.prec())}};
}

inline nlohmann::ordered_json poly_json(const IntPolynomial& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline nlohmann::ordered_json logconst_json(const LogExactConstant& c) {
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& [q, e] : c.prime_powers())
        primes.push_back({to_string(q), to_string(e)});
    return {{"rational", to_string(c.rational_factor())},
            {"exp", to_string(c.exp_exponent())},
            {"prime_powers", primes},
            {"display", c.str()}};
}

/// Printed value of mu rounded half-even to the given significant digits.
inline std::string mu_printed(const RealInterval& mu, int sig_digits = 6) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", sig_digits, mu.mid().raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

/// The deterministic payload section of a certificate document. Identical
/// inputs and precision flags produce byte-identical payloads.
inline nlohmann::ordered_json certificate_payload(const MeasureCertificate& c) {
    nlohmann::ordered_json j;
    j["beta"] = {{"input", c.beta_input},
                 {"min_poly", poly_json(c.min_poly)},
                 {"min_poly_pretty", poly_to_string(c.min_poly, "X")},
                 {"selected_root", ball_json(c.selected_root)},
                 {"irreducibility_assumed", c.assumes_irreducible}};
    j["x"] = to_string(c.x);
    j["degree"] = c.degree;
    j["delta"] = to_string(c.delta);
    j["den_beta"] = to_string(c.den_beta);
    j["Delta"] = logconst_json(c.Delta);
    nlohmann::ordered_json rho = nlohmann::ordered_json::array();
    for (const auto& r : c.rho2) rho.push_back(interval_json(r));
    j["rho2_per_conjugate"] = rho;
    if (c.log_Q) j["log_Q"] = interval_json(*c.log_Q);
    if (c.log_E) j["log_E"] = interval_json(*c.log_E);
    if (c.lambda) j["lambda"] = interval_json(*c.lambda);
    if (c.mu) {
        j["mu_upper_bound"] = interval_json(*c.mu);
        j["mu_printed"] = mu_printed(*c.mu);
    }
    j["hypotheses"] = {{"abs_beta_gt_1", c.flags.abs_beta_gt1},
                       {"x_in_range", c.flags.x_in_range},
                       {"rho_distinct_all_conjugates", c.flags.rho_distinct_all_conjugates},
                       {"lambda_positive", c.flags.lambda_positive}};
    j["precision_bits"] = static_cast<long>(c.precision_bits);
    j["status"] = to_string(c.status);
    if (!c.message.empty()) j["message"] = c.message;
    return j;
}

/// Full document: schema + payload + non-deterministic meta (timing, version).
inline nlohmann::ordered_json certificate_document(const MeasureCertificate& c,
                                                   double elapsed_ms = 0.0) {
    nlohmann::ordered_json doc;
    doc["schema"] = "shiftlog-certificate/1";
    doc["payload"] = certificate_payload(c);
    doc["meta"] = {{"tool", std::string(kToolName) + " " + std::string(kToolVersion)},
                   {"elapsed_ms", elapsed_ms}};
    return doc;
}

}  // namespace shiftlog
