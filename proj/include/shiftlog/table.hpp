#pragma once

#include <atomic>
#include <future>
#include <string>
#include <vector>

#include "shiftlog/betaspec.hpp"
#include "shiftlog/measure.hpp"

namespace shiftlog {

/// One row of the builtin examples table: an input spec, a shift, and the
/// published upper bound for mu as printed.
struct TableRow {
    std::string label;
    BetaSpec spec;
    Rational x;
    std::string printed;
};

inline std::vector<TableRow> builtin_table() {
    auto poly = [](const char* coeffs, const char* sel) {
        return BetaSpec::direct(parse_int_poly(coeffs),
                                sel ? std::optional<RootSelector>(parse_root_selector(sel))
                                    : std::nullopt);
    };
    auto field = [](const char* coeffs, const char* sel, const char* expr) {
        return BetaSpec::via_field(parse_int_poly(coeffs), parse_root_selector(sel), expr);
    };
    const Rational x0(0), x3 = make_rational(1, 3), x5 = make_rational(1, 5);

    std::vector<TableRow> rows;
    rows.push_back({"2", poly("-2,1", nullptr), x0, "4.6221"});
    rows.push_back({"2i", poly("4,0,1", "near:2i"), x0, "2.61631"});
    rows.push_back({"2i", poly("4,0,1", "near:2i"), x3, "7.73819"});
    rows.push_back({"2i", poly("4,0,1", "near:2i"), x5, "8.63437"});
    rows.push_back({"2^24", poly("-16777216,1", nullptr), x0, "2.1175"});
    rows.push_back({"2^24", poly("-16777216,1", nullptr), x3, "2.42328"});
    rows.push_back({"2^24", poly("-16777216,1", nullptr), x5, "2.44198"});
    const char* p510 = "190734863281250,-19531250,1";
    const char* n510 = "near:9765625+9765625i";
    rows.push_back({"5^10+5^10 i", poly(p510, n510), x0, "2.06402"});
    rows.push_back({"5^10+5^10 i", poly(p510, n510), x3, "2.20127"});
    rows.push_back({"5^10+5^10 i", poly(p510, n510), x5, "2.20906"});
    const char* c5w = "near:-0.855+1.481i";
    rows.push_back({"1000+5^(1/3) w", field("-5,0,0,1", c5w, "1000+Y"), x0, "6.82514"});
    rows.push_back({"1000+5^(1/3) w", field("-5,0,0,1", c5w, "1000+Y"), x3, "9.67602"});
    rows.push_back({"1000+5^(1/3) w", field("-5,0,0,1", c5w, "1000+Y"), x5, "9.89516"});
    rows.push_back({"3+2a", field("2,0,-3,0,2", "near:0.935+0.354i", "3+2*Y"), x0, "11.2027"});
    rows.push_back({"50+50*3^(1/4) i", field("-3,0,0,0,1", "near:1.316i", "50+50*Y"), x0, "163.837"});
    rows.push_back({"-6-5 sqrt2", poly("-14,12,1", "index:0"), x0, "6.47612"});
    rows.push_back({"-6-5 sqrt2", poly("-14,12,1", "index:0"), x3, "50.0916"});
    rows.push_back({"-6-5 sqrt2", poly("-14,12,1", "index:0"), x5, "77.9114"});
    rows.push_back({"18+12 sqrt2", poly("36,-36,1", "index:1"), x0, "5.49683"});
    rows.push_back({"18+12 sqrt2", poly("36,-36,1", "index:1"), x3, "13.7134"});
    rows.push_back({"18+12 sqrt2", poly("36,-36,1", "index:1"), x5, "14.8937"});
    rows.push_back({"3364+2378 sqrt2", poly("6728,-6728,1", "near:6727"), x0, "4.44656"});
    rows.push_back({"3364+2378 sqrt2", poly("6728,-6728,1", "near:6727"), x3, "5.80557"});
    rows.push_back({"3364+2378 sqrt2", poly("6728,-6728,1", "near:6727"), x5, "5.9012"});
    rows.push_back({"(7/6)^(1/3)/((7/6)^(1/3)-1)",
                    field("-7,0,0,6", "near:1.053", "Y/(Y-1)"), x0, "11.5787"});
    rows.push_back({"(7/6)^(1/3)/((7/6)^(1/3)-1)",
                    field("-7,0,0,6", "near:1.053", "Y/(Y-1)"), x3, "240.384"});
    rows.push_back({"2^(1/3)/(2^(1/3)-1)", field("-2,0,0,1", "near:1.26", "Y/(Y-1)"), x0, "22.4389"});
    return rows;
}

/// Tolerance of "within one unit in the last printed digit".
inline Rational printed_ulp(const std::string& printed) {
    auto dot = printed.find('.');
    size_t decimals = dot == std::string::npos ? 0 : printed.size() - dot - 1;
    return make_rational(1, pow_int(10, static_cast<unsigned long>(decimals)));
}

struct TableResult {
    TableRow row;
    MeasureCertificate cert;
    bool pass = false;
    std::string computed;  // printed-form of the computed mu (6 significant digits)
};

/// Certify one row and compare against the printed value, requiring the whole
/// certified mu interval to sit within +-1 ulp of the printed number.
inline TableResult run_table_row(const TableRow& row, Precision start_prec = 256,
                                 Precision prec_cap = 16384) {
    TableResult res;
    res.row = row;
    Rational ulp = printed_ulp(row.printed);
    CertifyOptions opts;
    opts.start_prec = start_prec;
    opts.prec_cap = prec_cap;
    opts.mu_abs_width = ulp.get_d() / 8.0;
    ResolvedBeta rb = resolve_beta(row.spec, start_prec, prec_cap);
    res.cert = certify(rb.beta, row.x, opts);
    res.cert.beta_input = rb.echo;
    res.cert.assumes_irreducible = rb.assumes_irreducible;
    if (res.cert.status != CertStatus::ok || !res.cert.mu.has_value()) return res;

    char* s = nullptr;
    mpfr_asprintf(&s, "%.6Rg", res.cert.mu->mid().raw());
    res.computed = s;
    mpfr_free_str(s);

    Rational target = parse_exact_number(row.printed);
    Precision p = 128;
    RealInterval allowed(Real::of(target - ulp, p, MPFR_RNDD), Real::of(target + ulp, p, MPFR_RNDU));
    res.pass = allowed.contains(*res.cert.mu);
    return res;
}

/// Run every builtin row, optionally fanning out to a small worker pool;
/// results come back in row order either way.
inline std::vector<TableResult> run_table(int jobs = 1, Precision start_prec = 256,
                                          Precision prec_cap = 16384) {
    auto rows = builtin_table();
    std::vector<TableResult> out(rows.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < rows.size(); ++i) out[i] = run_table_row(rows[i], start_prec, prec_cap);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            out[i] = run_table_row(rows[i], start_prec, prec_cap);
        }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

}  // namespace shiftlog
