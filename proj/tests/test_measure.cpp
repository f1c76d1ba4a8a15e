#include <catch2/catch_amalgamated.hpp>

#include "shiftlog/betaspec.hpp"
#include "shiftlog/measure.hpp"
#include "shiftlog/table.hpp"

using namespace shiftlog;

namespace {
AlgebraicNumber beta_two() {
    return AlgebraicNumber::create(parse_int_poly("-2,1"), RootSelector::by_index(0));
}
}  // namespace

TEST_CASE("compute_delta_degree") {
    auto b2 = beta_two();
    CHECK(compute_delta_degree(b2) == 1);
    auto bi = AlgebraicNumber::create(parse_int_poly("4,0,1"),
                                      RootSelector::near(Rational(0), Rational(2)));
    CHECK(compute_delta_degree(bi) == 1);  // d=2, complex -> d/2
    auto br = AlgebraicNumber::create(parse_int_poly("-14,12,1"), RootSelector::by_index(0));
    CHECK(compute_delta_degree(br) == 2);  // d=2, real
}

TEST_CASE("compute_Delta") {
    auto d1 = compute_Delta(1, Rational(0));  // e
    CHECK(d1.rational_factor() == 1);
    CHECK(d1.exp_exponent() == 1);
    CHECK(d1.prime_powers().empty());
    auto d2 = compute_Delta(1, make_rational(1, 3));  // e^{3/2} * 3 * 3^{1/2}
    CHECK(d2.rational_factor() == 3);
    CHECK(d2.exp_exponent() == make_rational(3, 2));
    REQUIRE(d2.prime_powers().size() == 1);
    CHECK(d2.prime_powers()[0].second == make_rational(1, 2));
    auto d3 = compute_Delta(2, Rational(0));  // 2e
    CHECK(d3.rational_factor() == 2);
    CHECK(d3.exp_exponent() == 1);
}

TEST_CASE("check_hypotheses") {
    auto ok = check_hypotheses(beta_two(), Rational(0));
    CHECK(ok.abs_beta_gt1);
    CHECK(ok.x_in_range);
    CHECK(ok.rho_distinct_all_conjugates);
    auto bad = AlgebraicNumber::create(parse_int_poly("1,-6,1"), RootSelector::by_index(1));
    CHECK_FALSE(check_hypotheses(bad, Rational(0)).rho_distinct_all_conjugates);
    CHECK_FALSE(check_hypotheses(beta_two(), Rational(1)).x_in_range);
}

TEST_CASE("certify beta=2, x=0 reproduces mu = 4.6221") {
    CertifyOptions opts;
    opts.mu_abs_width = 1e-6;
    auto cert = certify(beta_two(), Rational(0), opts);
    REQUIRE(cert.status == CertStatus::ok);
    REQUIRE(cert.mu.has_value());
    CHECK(cert.mu->mid().to_double() == Catch::Approx(4.62210).margin(5e-5));
    CHECK(cert.lambda->mid().to_double() == Catch::Approx(0.216352).margin(5e-6));
    CHECK(cert.delta == 1);
    CHECK(cert.den_beta == 1);
    // interval soundness under refinement: doubled start precision nests
    CertifyOptions fine = opts;
    fine.start_prec = 512;
    auto cert2 = certify(AlgebraicNumber::create(parse_int_poly("-2,1"),
                                                 RootSelector::by_index(0), 512),
                         Rational(0), fine);
    REQUIRE(cert2.status == CertStatus::ok);
    CHECK(cert.mu->overlaps(*cert2.mu));
    CHECK(cert2.mu->width() <= cert.mu->width());
}

TEST_CASE("certify rejects hypothesis failures with the right status") {
    auto bad = AlgebraicNumber::create(parse_int_poly("1,-6,1"), RootSelector::by_index(1));
    auto cert = certify(bad, Rational(0));
    CHECK(cert.status == CertStatus::hypothesis_failed);
    CHECK_FALSE(cert.flags.rho_distinct_all_conjugates);

    auto certx = certify(beta_two(), Rational(1));
    CHECK(certx.status == CertStatus::hypothesis_failed);

    // |beta| < 1 is also a hypothesis failure
    auto small = AlgebraicNumber::create(parse_int_poly("-1,3"), RootSelector::by_index(0));
    auto certs = certify(small, Rational(0));
    CHECK(certs.status == CertStatus::hypothesis_failed);
    CHECK_FALSE(certs.flags.abs_beta_gt1);
}

TEST_CASE("lambda can be certified non-positive") {
    // beta=2 with x=3/4: Delta = e^2 * 4 * 2 makes log Q exceed log E
    auto cert = certify(beta_two(), make_rational(3, 4));
    CHECK(cert.status == CertStatus::lambda_not_positive);
    REQUIRE(cert.lambda.has_value());
    CHECK(cert.lambda->hi().sign() <= 0);
}

TEST_CASE("mu * lambda = 1 within interval arithmetic") {
    CertifyOptions opts;
    opts.mu_abs_width = 1e-8;
    auto b = AlgebraicNumber::create(parse_int_poly("-16777216,1"), RootSelector::by_index(0));
    auto cert = certify(b, make_rational(1, 3), opts);
    REQUIRE(cert.status == CertStatus::ok);
    CHECK(cert.mu->mid().to_double() == Catch::Approx(2.42328).margin(2e-5));
    auto prod = *cert.mu * *cert.lambda;
    CHECK(prod.contains(Rational(1)));
    // log E = 2 log rho2(beta) within widths
    auto twice = log_interval(cert.rho2[0]).scaled(Rational(2));
    CHECK(twice.overlaps(*cert.log_E));
}

TEST_CASE("table row: beta=2i x=0 via near-selector") {
    auto rows = builtin_table();
    auto res = run_table_row(rows[1]);
    REQUIRE(res.cert.status == CertStatus::ok);
    CHECK(res.pass);
    CHECK(res.computed == "2.61631");
    CHECK(res.cert.delta == 1);
    CHECK(res.cert.degree == 2);
}

TEST_CASE("table row via field expression: 1000 + 5^(1/3) w") {
    auto rows = builtin_table();
    REQUIRE(rows[10].label == "1000+5^(1/3) w");
    auto res = run_table_row(rows[10]);
    REQUIRE(res.cert.status == CertStatus::ok);
    CHECK(res.pass);
    CHECK(res.cert.degree == 3);
    CHECK(res.cert.delta == make_rational(3, 2));
    CHECK(res.cert.min_poly == parse_int_poly("-1000000005,3000000,-3000,1"));
    CHECK_FALSE(res.cert.assumes_irreducible);
}

TEST_CASE("table row with field division: cbrt(2)/(cbrt(2)-1)") {
    auto rows = builtin_table();
    auto& row = rows.back();
    REQUIRE(row.label == "2^(1/3)/(2^(1/3)-1)");
    auto res = run_table_row(row);
    REQUIRE(res.cert.status == CertStatus::ok);
    CHECK(res.pass);
    CHECK(res.cert.min_poly == parse_int_poly("-2,6,-6,1"));
    CHECK(res.cert.delta == 3);
    CHECK(res.cert.den_beta == 1);
}

TEST_CASE("certificate intervals are honest upper bounds") {
    CertifyOptions opts;
    opts.mu_abs_width = 1e-7;
    auto cert = certify(beta_two(), Rational(0), opts);
    // mu is reported as an interval for the upper bound, never a bare float
    CHECK(cert.mu->width().to_double() <= 1e-7);
    CHECK(cert.mu->lo() > Real::of(2L, 64));  // mu >= 2 delta always
}
