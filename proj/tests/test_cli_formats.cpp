#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "shiftlog/betaspec.hpp"
#include "shiftlog/document.hpp"
#include "shiftlog/table.hpp"

using namespace shiftlog;

TEST_CASE("exact number parsing") {
    CHECK(parse_exact_number("0") == 0);
    CHECK(parse_exact_number("1/3") == make_rational(1, 3));
    CHECK(parse_exact_number("-0.855") == make_rational(-855, 1000));
    CHECK(parse_exact_number("50.0916") == make_rational(500916, 10000));
    CHECK(parse_exact_number("+2/7") == make_rational(2, 7));
    CHECK_THROWS_AS(parse_exact_number("1/0"), ParseError);
    CHECK_THROWS_AS(parse_exact_number("abc"), ParseError);
    CHECK_THROWS_AS(parse_exact_number("1.2.3"), ParseError);
}

TEST_CASE("complex literal parsing") {
    auto [a, b] = parse_complex("2i");
    CHECK(a == 0);
    CHECK(b == 2);
    auto [c, d] = parse_complex("-0.855+1.48i");
    CHECK(c == make_rational(-855, 1000));
    CHECK(d == make_rational(148, 100));
    auto [e, f] = parse_complex("-13.07");
    CHECK(e == make_rational(-1307, 100));
    CHECK(f == 0);
    auto [g, h] = parse_complex("9765625+9765625i");
    CHECK(g == 9765625);
    CHECK(h == 9765625);
    auto [i, j] = parse_complex("1-i");
    CHECK(i == 1);
    CHECK(j == -1);
    CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
    CHECK_THROWS_AS(parse_complex("i+i"), ParseError);
    CHECK_THROWS_AS(parse_complex(""), ParseError);
}

TEST_CASE("root selector parsing") {
    auto s = parse_root_selector("index:2");
    CHECK_FALSE(s.is_near);
    CHECK(s.index == 2);
    auto n = parse_root_selector("near:-0.855+1.481i");
    CHECK(n.is_near);
    CHECK(n.near_re == make_rational(-855, 1000));
    CHECK_THROWS_AS(parse_root_selector("foo:1"), ParseError);
}

TEST_CASE("field expression parsing") {
    auto m = parse_int_poly("-2,0,0,1");  // Y^3 - 2
    auto e = parse_field_expr("Y/(Y-1)", m);
    // beta = y/(y-1); check beta * (y-1) == y
    auto y = FieldElement::generator(m);
    auto prod = e * (y - FieldElement::one(m));
    CHECK(prod.rep() == y.rep());
    auto c = parse_field_expr("1000+Y", m);
    CHECK(c.rep() == RatPolynomial({Rational(1000), Rational(1)}));
    auto p = parse_field_expr("3+2*Y^2 - Y*Y", m);
    CHECK(p.rep() == RatPolynomial({Rational(3), Rational(0), Rational(1)}));
    auto q = parse_field_expr("(1+Y)^3", m);  // 1 + 3Y + 3Y^2 + Y^3 = 3 + 3Y + 3Y^2 mod Y^3-2
    CHECK(q.rep() == RatPolynomial({Rational(3), Rational(3), Rational(3)}));
    auto r = parse_field_expr("7/6", m);
    CHECK(r.rep() == RatPolynomial::constant(make_rational(7, 6)));
    CHECK_THROWS_AS(parse_field_expr("Y+", m), ParseError);
    CHECK_THROWS_AS(parse_field_expr("(Y", m), ParseError);
    CHECK_THROWS_AS(parse_field_expr("Y/0", m), std::domain_error);
}

TEST_CASE("resolve_beta via expression derives the minimal polynomial") {
    BetaSpec spec = BetaSpec::via_field(parse_int_poly("-5,0,0,1"),
                                        parse_root_selector("near:-0.855+1.481i"), "1000+Y");
    auto rb = resolve_beta(spec);
    CHECK(rb.beta.min_poly() == parse_int_poly("-1000000005,3000000,-3000,1"));
    CHECK(rb.charpoly_power == 1);
    CHECK_FALSE(rb.assumes_irreducible);
    // selected root is the image of the selected generator root
    CHECK(rb.beta.selected().im().sign() > 0);
    CHECK(rb.beta.selected().re().to_double() == Catch::Approx(999.145).margin(0.01));
}

TEST_CASE("resolve_beta direct entry needs a selector for deg > 1") {
    BetaSpec spec = BetaSpec::direct(parse_int_poly("-2,0,1"));
    CHECK_THROWS_AS(resolve_beta(spec), ParseError);
    BetaSpec ok = BetaSpec::direct(parse_int_poly("-2,1"));
    CHECK(resolve_beta(ok).beta.degree() == 1);
}

TEST_CASE("certificate document payload is deterministic and lossless") {
    auto beta = AlgebraicNumber::create(parse_int_poly("-2,1"), RootSelector::by_index(0));
    CertifyOptions opts;
    opts.mu_abs_width = 1e-6;
    auto c1 = certify(beta, Rational(0), opts);
    c1.beta_input = "poly X - 2";
    auto c2 = certify(beta, Rational(0), opts);
    c2.beta_input = "poly X - 2";
    auto p1 = certificate_payload(c1), p2 = certificate_payload(c2);
    CHECK(p1.dump() == p2.dump());

    // decimal strings reconstruct the interval bounds exactly at the recorded precision
    const auto& mu = *c1.mu;
    std::string lo_str = exact_decimal(mu.lo());
    Real back(mu.lo().prec());
    mpfr_set_str(back.raw(), lo_str.c_str(), 10, MPFR_RNDN);
    CHECK(back == mu.lo());

    // document carries schema and meta
    auto doc = certificate_document(c1, 12.5);
    CHECK(doc["schema"] == "shiftlog-certificate/1");
    CHECK(doc["payload"]["mu_printed"] == "4.6221");
    CHECK(doc["meta"]["tool"] == "shiftlog 1.0.0");
}

TEST_CASE("printed ulp and row comparison") {
    CHECK(printed_ulp("4.6221") == make_rational(1, 10000));
    CHECK(printed_ulp("163.837") == make_rational(1, 1000));
    CHECK(printed_ulp("2.1175") == make_rational(1, 10000));
}

TEST_CASE("builtin table has 27 rows and distinct labels per group") {
    auto rows = builtin_table();
    CHECK(rows.size() == 27);
    // all printed values parse
    for (const auto& r : rows) CHECK(printed_ulp(r.printed) > 0);
}
