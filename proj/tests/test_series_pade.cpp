#include <catch2/catch_amalgamated.hpp>

#include "shiftlog/arith.hpp"
#include "shiftlog/pade.hpp"
#include "shiftlog/series.hpp"

using namespace shiftlog;

static std::vector<Rational> x_grid() {
    return {Rational(0), make_rational(1, 3), make_rational(1, 5), make_rational(2, 7)};
}

TEST_CASE("truncated series window algebra") {
    // (1/z) * (1/z) = 1/z^2 with order preserved
    auto a = TruncatedSeries::truncated(-3, {Rational(0), Rational(0), Rational(1)});  // 1/z
    auto p = a * a;
    CHECK(p.coeff(-2) == 1);
    CHECK(p.lo() == -4);  // truncation moved: lo = max(lo1 + hi2, lo2 + hi1) = -3 + -1
    CHECK_THROWS(p.coeff(-5));
    // S - S = 0 on its window
    auto d = a - a;
    CHECK(d.is_zero());
    // f-series coefficient checks
    auto f0 = f_series(Rational(0), 6);
    CHECK(f0.coeff(-1) == 1);
    CHECK(f0.coeff(-2) == make_rational(1, 2));
    CHECK(f0.coeff(-3) == make_rational(1, 3));
    auto f3 = f_series(make_rational(1, 3), 4);
    CHECK(f3.coeff(-1) == 1);
    CHECK(f3.coeff(-2) == make_rational(4, 7));
    CHECK(f3.coeff(0) == 0);  // exponents above -1 are exactly zero
}

TEST_CASE("build_explicit small cases") {
    auto p0 = build_explicit(0, Rational(0));
    CHECK(p0.Q == RatPolynomial::constant(Rational(1)));
    CHECK(p0.P.is_zero());

    auto p1 = build_explicit(1, Rational(0));
    CHECK(p1.Q == RatPolynomial({Rational(-1), Rational(2)}));
    CHECK(p1.P == RatPolynomial::constant(Rational(2)));

    Rational x = make_rational(2, 7);
    auto p1x = build_explicit(1, x);
    CHECK(p1x.Q == RatPolynomial({-(1 + x), 2 + x}));
    CHECK(p1x.P == RatPolynomial::constant(2 + x));
}

TEST_CASE("recurrence coefficients") {
    auto rc = recurrence_coeffs(1, Rational(0));
    CHECK(rc.A == make_rational(1, 3));
    CHECK(rc.B == make_rational(1, 2));
    CHECK(rc.C == make_rational(1, 6));
    auto rc2 = recurrence_coeffs(1, make_rational(1, 2));
    CHECK(rc2.A == make_rational(20, 63));
    // limits: A_n -> 1/4, B_n -> 1/2, C_n -> 1/4 within O(1/n)
    for (long n : {1000L, 4000L}) {
        auto r = recurrence_coeffs(n, make_rational(1, 3));
        CHECK(abs(r.A - make_rational(1, 4)) < make_rational(1, n));
        CHECK(abs(r.B - make_rational(1, 2)) < make_rational(1, n));
        CHECK(abs(r.C - make_rational(1, 4)) < make_rational(1, n));
        CHECK(r.A > 0);
        CHECK(r.C > 0);
    }
}

TEST_CASE("recurrence reproduces explicit construction exactly") {
    for (const Rational& x : x_grid()) {
        RatPolynomial z = RatPolynomial::identity();
        RatPolynomial qp = build_explicit(0, x).Q, qc = build_explicit(1, x).Q;
        RatPolynomial pp = build_explicit(0, x).P, pc = build_explicit(1, x).P;
        for (long n = 1; n < 40; ++n) {
            auto rc = recurrence_coeffs(n, x);
            RatPolynomial qn = step_recurrence(qp, qc, rc, z);
            RatPolynomial pn = step_recurrence(pp, pc, rc, z);
            auto e = build_explicit(n + 1, x);
            REQUIRE(qn == e.Q);
            REQUIRE(pn == e.P);
            qp = std::move(qc); qc = std::move(qn);
            pp = std::move(pc); pc = std::move(pn);
        }
    }
}

TEST_CASE("zero seeds stay zero") {
    auto rc = recurrence_coeffs(3, make_rational(1, 3));
    CHECK(step_recurrence(Rational(0), Rational(0), rc, Rational(2)) == 0);
}

TEST_CASE("pade order check") {
    for (const Rational& x : x_grid())
        for (long n = 0; n <= 12; ++n) REQUIRE(pade_order_check(n, x));

    SECTION("the first remainder coefficient matches the R-series leading term") {
        for (const Rational& x : {Rational(0), make_rational(1, 3)}) {
            for (long n = 1; n <= 8; ++n) {
                auto pp = build_explicit(n, x);
                auto lhs = TruncatedSeries::from_polynomial(pp.Q) * f_series(x, 2 * n + 2) -
                           TruncatedSeries::from_polynomial(pp.P);
                Rational expect = pochhammer(1 + x, n) * Rational(factorial(n)) /
                                  pochhammer(x + 2, 2 * n);
                CHECK(lhs.coeff(-n - 1) == expect);
            }
        }
        // n=1, x=0: coefficient of 1/z^2 is 1/6
        auto pp = build_explicit(1, Rational(0));
        auto lhs = TruncatedSeries::from_polynomial(pp.Q) * f_series(Rational(0), 4) -
                   TruncatedSeries::from_polynomial(pp.P);
        CHECK(lhs.coeff(-2) == make_rational(1, 6));
    }
}

TEST_CASE("determinant nonvanishing") {
    CHECK(determinant_check(0, Rational(0)) == RatPolynomial::constant(Rational(2)));
    Rational x = make_rational(2, 7);
    CHECK(determinant_check(0, x) == RatPolynomial::constant(2 + x));
    CHECK_FALSE(determinant_check(5, make_rational(1, 5)).is_zero());
}

TEST_CASE("leading coefficient and degrees") {
    for (const Rational& x : x_grid()) {
        for (long n = 0; n <= 16; ++n) {
            auto pp = build_explicit(n, x);
            CHECK(pp.Q.degree() == n);
            CHECK(pp.P.degree() == n - 1);
            CHECK(pp.Q.lc() == pochhammer(n + 1 + x, n) / Rational(factorial(n)));
        }
    }
}

TEST_CASE("integrality of cleared coefficients") {
    for (const Rational& x : x_grid()) {
        for (long n = 1; n <= 16; ++n) {
            BigInt m = den(x) * nu_n(x, n) * d_n(x, n);
            auto pp = build_explicit(n, x);
            for (const auto& c : pp.Q.coeffs()) CHECK(divides(den(c), m));
            for (const auto& c : pp.P.coeffs()) CHECK(divides(den(c), m));
        }
    }
}

TEST_CASE("eval_f at x=0 equals log(z/(z-1))") {
    // f(2) = log 2
    ComplexBall z = ComplexBall::exact(Rational(2), 256);
    ComplexBall v = eval_f(Rational(0), z, mul_2si(Real::of(1L, 32), -200, 32));
    Real l2(256);
    mpfr_const_log2(l2.raw(), MPFR_RNDN);
    CHECK(std::abs(sub(v.re(), l2, 64).to_double()) < 1e-55);
    CHECK(v.radius().to_double() < 1e-55);
    CHECK(std::abs(v.im().to_double()) < 1e-55);
    // f(2i) = log((4-2i)/5): check against principal log computed directly
    ComplexBall zi = ComplexBall::exact(Rational(0), Rational(2), 256);
    ComplexBall vi = eval_f(Rational(0), zi, mul_2si(Real::of(1L, 32), -200, 32));
    // w = zi/(zi-1) = (4-2i)/5 exactly; log w = log|w| + i arg(w)
    Real wr = Real::of(make_rational(4, 5), 300), wi = Real::of(make_rational(-2, 5), 300);
    Real mag = hypot(wr, wi, 300);
    Real lr = log(mag, 300);
    Real th = atan2(wi, wr, 300);
    CHECK(std::abs(sub(vi.re(), lr, 64).to_double()) < 1e-55);
    CHECK(std::abs(sub(vi.im(), th, 64).to_double()) < 1e-55);
    // rejects |z| <= 1
    CHECK_THROWS(eval_f(Rational(0), ComplexBall::exact(make_rational(1, 2), 64), Real::of(1L, 32)));
}

TEST_CASE("eval_R agrees with high-precision Q f - P") {
    for (const Rational& x : {Rational(0), make_rational(1, 3)}) {
        for (long n : {0L, 1L, 5L, 12L, 20L}) {
            for (bool imag : {false, true}) {
                Precision hp = 1024;
                ComplexBall z = imag ? ComplexBall::exact(Rational(0), Rational(2), hp)
                                     : ComplexBall::exact(Rational(2), hp);
                Real err = mul_2si(Real::of(1L, 32), -900, 32);
                ComplexBall direct = eval_R(n, x, z, err);
                auto pp = build_explicit(n, x);
                ComplexBall qf = eval_poly(pp.Q, z) * eval_f(x, z, err);
                ComplexBall diff = qf - eval_poly(pp.P, z);
                // both balls contain R_n(z), so they must overlap
                Real gap = ComplexBall::mid_distance_lower(direct, diff);
                CHECK(gap <= rad::add(direct.radius(), diff.radius()));
                // and the direct evaluation is far tighter at large n
                if (n >= 5) CHECK(direct.radius() <= diff.radius());
            }
        }
    }
    SECTION("R_0 = f") {
        ComplexBall z = ComplexBall::exact(Rational(2), 128);
        Real err = mul_2si(Real::of(1L, 32), -100, 32);
        ComplexBall r0 = eval_R(0, Rational(0), z, err);
        ComplexBall f = eval_f(Rational(0), z, err);
        Real gap = ComplexBall::mid_distance_lower(r0, f);
        CHECK(gap <= rad::add(r0.radius(), f.radius()));
    }
    SECTION("leading behaviour: R_1 ~ (1/6) z^-2 at x=0") {
        ComplexBall z = ComplexBall::exact(Rational(1000000), 128);
        ComplexBall r = eval_R(1, Rational(0), z, Real(32));
        double v = r.re().to_double() * 1e12;
        CHECK(v == Catch::Approx(1.0 / 6).epsilon(1e-4));
    }
}
