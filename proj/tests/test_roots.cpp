#include <catch2/catch_amalgamated.hpp>

#include "shiftlog/roots.hpp"

using namespace shiftlog;

namespace {
Real tiny(long bits) { return mul_2si(Real::of(1L, 32), -bits, 32); }
}  // namespace

TEST_CASE("degree one: exact rational root") {
    auto balls = find_conjugates(parse_int_poly("-2,1"), tiny(60));
    REQUIRE(balls.size() == 1);
    CHECK(balls[0].radius().is_zero());
    CHECK(balls[0].contains(Rational(2), Rational(0)));
    // non-dyadic rational root: 1/3
    auto b3 = find_conjugates(parse_int_poly("-1,3"), tiny(60));
    CHECK(b3[0].contains(make_rational(1, 3), Rational(0)));
    CHECK(b3[0].radius().to_double() < 1e-18);
}

TEST_CASE("X^2 - 2: disjoint balls at +-sqrt2") {
    auto balls = find_conjugates(parse_int_poly("-2,0,1"), tiny(100));
    REQUIRE(balls.size() == 2);
    // canonical order: sorted by real part
    CHECK(balls[0].re() < balls[1].re());
    // oracle: independently computed sqrt 2
    Real s2 = sqrt(Real::of(2L, 256), 256);
    Rational s2q = s2.to_rational();  // dyadic, within 2^-255 of sqrt2
    CHECK(balls[1].contains(s2q, Rational(0)));
    CHECK(balls[0].contains(-s2q, Rational(0)));
}

TEST_CASE("clustered far from origin: (X-1000)^3 - 5") {
    // oracle: roots are 1000 + 5^(1/3) w, w in the cube roots of unity
    auto balls = find_conjugates(parse_int_poly("-1000000005,3000000,-3000,1"), tiny(80));
    REQUIRE(balls.size() == 3);
    Precision p = 256;
    Real c5 = exp(div_si(log(Real::of(5L, p), p), 3, p), p);
    Real half = Real::of(make_rational(-1, 2), p);
    Real s32 = mul_2si(sqrt(Real::of(3L, p), p), -1, p);
    // de Moivre: 1000 + c5, 1000 - c5/2 +- i c5 sqrt3/2
    Rational re1 = add(Real::of(1000L, p), c5, p).to_rational();
    CHECK(balls[2].contains(re1, Rational(0)));
    Rational re2 = add(Real::of(1000L, p), mul(c5, half, p), p).to_rational();
    Rational im2 = mul(c5, s32, p).to_rational();
    bool found_plus = balls[0].contains(re2, im2) || balls[1].contains(re2, im2);
    bool found_minus = balls[0].contains(re2, -im2) || balls[1].contains(re2, -im2);
    CHECK(found_plus);
    CHECK(found_minus);
    for (const auto& b : balls) CHECK(b.radius() <= tiny(80));
}

TEST_CASE("pairwise disjointness and radius targets on a quartic") {
    auto balls = find_conjugates(parse_int_poly("2,0,-3,0,2"), tiny(120));
    REQUIRE(balls.size() == 4);
    for (size_t i = 0; i < balls.size(); ++i)
        for (size_t j = i + 1; j < balls.size(); ++j) {
            Real d = ComplexBall::mid_distance_lower(balls[i], balls[j]);
            CHECK(d > rad::add(balls[i].radius(), balls[j].radius()));
        }
    // all four roots lie on the unit circle for 2X^4 - 3X^2 + 2
    for (const auto& b : balls) {
        auto a = b.abs_interval();
        CHECK(a.contains(Rational(1)));
    }
}

TEST_CASE("non-squarefree input rejected") {
    CHECK_THROWS_AS(find_conjugates(parse_int_poly("1,2,1"), tiny(40)), NonSquarefreeError);
}

TEST_CASE("refinement shrinks radii") {
    auto coarse = find_conjugates(parse_int_poly("-2,0,1"), tiny(50));
    auto fine = find_conjugates(parse_int_poly("-2,0,1"), tiny(200));
    for (size_t i = 0; i < 2; ++i) CHECK(fine[i].radius() < coarse[i].radius());
    // nesting: the refined midpoint lies inside the coarse ball
    for (size_t i = 0; i < 2; ++i) {
        Rational mid_re = fine[i].re().to_rational();
        Rational mid_im = fine[i].im().to_rational();
        CHECK(coarse[i].contains(mid_re, mid_im));
    }
}

TEST_CASE("huge-coefficient quadratic (5^10 + 5^10 i scale)") {
    BigInt a = pow_int(5, 10);
    std::vector<BigInt> c{2 * a * a, -2 * a, 1};
    auto balls = find_conjugates(IntPolynomial(c), tiny(90));
    REQUIRE(balls.size() == 2);
    Rational ar(a);
    CHECK((balls[0].contains(ar, -ar) || balls[1].contains(ar, -ar)));
    CHECK((balls[0].contains(ar, ar) || balls[1].contains(ar, ar)));
}
