#include <catch2/catch_amalgamated.hpp>

#include "shiftlog/numfield.hpp"

using namespace shiftlog;

TEST_CASE("den_algebraic") {
    CHECK(den_algebraic(parse_int_poly("-2,1")) == 1);
    CHECK(den_algebraic(parse_int_poly("-1,2")) == 2);  // beta = 1/2
    // 2X^4 - 3X^2 + 2: oracle = monic minpoly of m*alpha has integer coefficients
    // m=1: X^4 - (3/2)X^2 + 1 not integral; m=2: X^4 - 6X^2 + 32 integral
    CHECK(den_algebraic(parse_int_poly("2,0,-3,0,2")) == 2);
    CHECK(den_algebraic(parse_int_poly("-1,0,3")) == 3);
    // den divides the leading coefficient
    for (const char* s : {"-4,6", "5,0,0,12", "7,-3,9"}) {
        auto p = primitive_part(parse_int_poly(s));
        BigInt lc = p.lc() < 0 ? BigInt(-p.lc()) : p.lc();
        CHECK(divides(den_algebraic(p), lc));
    }
}

TEST_CASE("count_roots_in_unit_interval") {
    CHECK(count_roots_in_unit_interval(parse_int_poly("-2,1")) == 0);
    CHECK(count_roots_in_unit_interval(parse_int_poly("1,-6,1")) == 1);
    CHECK(count_roots_in_unit_interval(parse_int_poly("-14,12,1")) == 0);
}

TEST_CASE("AlgebraicNumber creation and selectors") {
    auto sqrt2 = AlgebraicNumber::create(parse_int_poly("-2,0,1"), RootSelector::by_index(1));
    CHECK(sqrt2.degree() == 2);
    CHECK(sqrt2.selected().re().sign() > 0);

    auto i2 = AlgebraicNumber::create(parse_int_poly("4,0,1"),
                                      RootSelector::near(Rational(0), Rational(2)));
    CHECK(i2.selected().im().sign() > 0);
    CHECK(i2.selected().contains(Rational(0), Rational(2)));

    CHECK_THROWS_AS(AlgebraicNumber::create(parse_int_poly("-2,0,1"),
                                            RootSelector::near(Rational(0), Rational(0))),
                    AmbiguousRootError);
    CHECK_THROWS(AlgebraicNumber::create(parse_int_poly("-2,0,1"), RootSelector::by_index(5)));

    auto fine = sqrt2.refined();
    CHECK(fine.prec() > sqrt2.prec());
    CHECK(fine.selected().re().sign() > 0);
    CHECK(fine.selected().radius() < sqrt2.selected().radius());
}

TEST_CASE("certified_real") {
    auto sqrt2 = AlgebraicNumber::create(parse_int_poly("-2,0,1"), RootSelector::by_index(1));
    auto r = certified_real(sqrt2.min_poly(), sqrt2.selected());
    REQUIRE(r.has_value());
    CHECK(*r);
    auto i2 = AlgebraicNumber::create(parse_int_poly("4,0,1"),
                                      RootSelector::near(Rational(0), Rational(2)));
    auto c = certified_real(i2.min_poly(), i2.selected());
    REQUIRE(c.has_value());
    CHECK_FALSE(*c);
}

TEST_CASE("field element arithmetic and inverse") {
    auto m = parse_int_poly("-2,0,1");  // Y^2 - 2
    auto y = FieldElement::generator(m);
    auto one = FieldElement::one(m);
    CHECK(field_inverse(one).rep() == RatPolynomial::constant(Rational(1)));
    // 1/sqrt2 = sqrt2/2
    auto inv = field_inverse(y);
    CHECK(inv.rep() == RatPolynomial({Rational(0), make_rational(1, 2)}));
    // (Y-1) inverse over Y^3 - 2: (Y-1)(Y^2+Y+1) = Y^3 - 1 = 1 mod Y^3-2
    auto m3 = parse_int_poly("-2,0,0,1");
    auto e = FieldElement(m3, RatPolynomial({Rational(-1), Rational(1)}));
    auto inv3 = field_inverse(e);
    CHECK(inv3.rep() == RatPolynomial({Rational(1), Rational(1), Rational(1)}));
    // reduction happens mod the field polynomial
    auto ysq = FieldElement(m, RatPolynomial({Rational(0), Rational(0), Rational(1)}));
    CHECK(ysq.rep() == RatPolynomial::constant(Rational(2)));
    CHECK_THROWS_AS(field_inverse(FieldElement::zero(m)), std::domain_error);
}

TEST_CASE("element_charpoly") {
    auto m = parse_int_poly("-2,0,1");
    auto y = FieldElement::generator(m);
    CHECK(element_charpoly(y) == RatPolynomial({Rational(-2), Rational(0), Rational(1)}));
    auto ysq = y * y;
    // (X-2)^2
    CHECK(element_charpoly(ysq) == RatPolynomial({Rational(4), Rational(-4), Rational(1)}));
    auto yp1 = y + FieldElement::one(m);
    // roots 1 +- sqrt2: X^2 - 2X - 1
    CHECK(element_charpoly(yp1) == RatPolynomial({Rational(-1), Rational(-2), Rational(1)}));
}

TEST_CASE("element_minpoly") {
    auto m = parse_int_poly("-2,0,1");
    auto [p1, k1] = element_minpoly(FieldElement::generator(m) * FieldElement::generator(m));
    CHECK(p1 == parse_int_poly("-2,1"));
    CHECK(k1 == 2);
    auto m3 = parse_int_poly("-5,0,0,1");
    auto [p2, k2] = element_minpoly(FieldElement::generator(m3));
    CHECK(p2 == m3);
    CHECK(k2 == 1);
    // 3 + 2 alpha over 2Y^4 - 3Y^2 + 2: degree 4 integer polynomial, k = 1
    auto m4 = parse_int_poly("2,0,-3,0,2");
    auto e = FieldElement(m4, RatPolynomial({Rational(3), Rational(2)}));
    auto [p3, k3] = element_minpoly(e);
    CHECK(k3 == 1);
    CHECK(p3.degree() == 4);
    CHECK(p3.lc() == 1);  // 3+2alpha is an algebraic integer
    // oracle: each root of p3 must match 3 + 2*(a root of m4) within ball radii
    auto roots_e = find_conjugates(p3, mul_2si(Real::of(1L, 32), -80, 32));
    auto gamma = AlgebraicNumber::create(m4, RootSelector::by_index(0), 256);
    for (const auto& g : gamma.conjugates()) {
        ComplexBall img = g.scaled(Rational(2)) + ComplexBall::exact(3L, g.prec());
        bool hit = false;
        for (const auto& r : roots_e) {
            Real gap = ComplexBall::mid_distance_lower(img, r);
            if (gap <= rad::add(img.radius(), r.radius())) hit = true;
        }
        CHECK(hit);
    }
}

TEST_CASE("weil heights") {
    auto m = parse_int_poly("-2,0,1");
    auto gamma = AlgebraicNumber::create(m, RootSelector::by_index(1), 128);
    // h(3/2) = log 3
    auto h32 = weil_height(FieldElement::constant(m, make_rational(3, 2)), gamma);
    CHECK(std::abs(sub(h32.mid(), log(Real::of(3L, 128), 128), 64).to_double()) < 1e-15);
    CHECK(h32.width().to_double() < 1e-15);
    // h(1) = 0, h(-1) = 0
    CHECK(weil_height(FieldElement::one(m), gamma).contains(Rational(0)));
    CHECK(weil_height(FieldElement::constant(m, Rational(-1)), gamma).contains(Rational(0)));
    // h(sqrt2) = (1/2) log 2
    auto h = weil_height(FieldElement::generator(m), gamma);
    Real expect = mul_2si(log(Real::of(2L, 128), 128), -1, 128);
    CHECK(std::abs(sub(h.mid(), expect, 64).to_double()) < 1e-15);
    // h(a) = h(1/a) (standard identity; exercises charpoly + inverse together)
    for (auto rep : {RatPolynomial({Rational(1), Rational(2)}),
                     RatPolynomial({make_rational(2, 3), make_rational(-1, 5)}),
                     RatPolynomial({Rational(0), make_rational(7, 2)})}) {
        FieldElement e(m, rep);
        auto ha = weil_height(e, gamma);
        auto hi = weil_height(field_inverse(e), gamma);
        CHECK(ha.overlaps(hi));
        CHECK(ha.hi().sign() >= 0);
    }
    // height_rational agrees with the field path for rationals
    auto hr = height_rational(make_rational(3, 2));
    CHECK(std::abs(sub(hr.mid(), log(Real::of(3L, 128), 128), 64).to_double()) < 1e-15);
    CHECK(height_rational(Rational(1)).contains(Rational(0)));
}
