#include <catch2/catch_amalgamated.hpp>

#include "shiftlog/arith.hpp"

using namespace shiftlog;

TEST_CASE("den_rational") {
    CHECK(den_rational(Rational(0)) == 1);
    CHECK(den_rational(make_rational(1, 3)) == 3);
    CHECK(den_rational(make_rational(2, 6)) == 3);
    CHECK(den_rational(make_rational(-5, 10)) == 2);
}

TEST_CASE("euler_phi matches brute force") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(3) == 2);
    // brute force: count units mod m
    for (long m = 1; m <= 200; ++m) {
        long count = 0;
        for (long k = 1; k <= m; ++k)
            if (gcd_int(k, m) == 1) ++count;
        CHECK(euler_phi(m) == count);
    }
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("nu exact symbolic values") {
    auto n0 = nu(Rational(0));
    CHECK(n0.rational_factor() == 1);
    CHECK(n0.prime_powers().empty());

    auto n3 = nu(make_rational(1, 3));
    CHECK(n3.rational_factor() == 3);
    REQUIRE(n3.prime_powers().size() == 1);
    CHECK(n3.prime_powers()[0].first == 3);
    CHECK(n3.prime_powers()[0].second == make_rational(1, 2));

    auto n6 = nu(make_rational(1, 6));
    CHECK(n6.rational_factor() == 6);
    REQUIRE(n6.prime_powers().size() == 2);
    CHECK(n6.prime_powers()[0].first == 2);
    CHECK(n6.prime_powers()[0].second == 1);
    CHECK(n6.prime_powers()[1].first == 3);
    CHECK(n6.prime_powers()[1].second == make_rational(1, 2));
}

TEST_CASE("nu_n") {
    CHECK(nu_n(Rational(0), 0) == 1);
    CHECK(nu_n(Rational(0), 17) == 1);
    CHECK(nu_n(make_rational(1, 3), 4) == 729);  // 3^4 * 3^2
    CHECK(nu_n(make_rational(1, 2), 3) == 64);   // 2^3 * 2^3
}

TEST_CASE("d_n") {
    CHECK(d_n(Rational(0), 4) == 12);
    CHECK(d_n(make_rational(1, 3), 2) == 28);
    CHECK(d_n(make_rational(1, 2), 3) == 105);
    SECTION("d_n(0, n) equals lcm(1..n) for n <= 100") {
        BigInt l = 1;
        for (long n = 1; n <= 100; ++n) {
            l = lcm_int(l, n);
            CHECK(d_n(Rational(0), n) == l);
        }
    }
}

TEST_CASE("kappa_n") {
    CHECK(kappa_n(1, Rational(0), 4) == 12);
    CHECK(kappa_n(2, Rational(0), 2) == 8);
    CHECK(kappa_n(1, make_rational(1, 3), 2) == 2268);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(7), 0) == 1);
    CHECK(pochhammer(Rational(2), 3) == 24);
    CHECK(pochhammer(make_rational(1, 3), 2) == make_rational(4, 9));
}

TEST_CASE("nu_n is within a bounded factor of nu^n") {
    for (const Rational& x : {make_rational(1, 3), make_rational(1, 5)}) {
        Real log_nu = nu(x).log_value(128).mid();
        for (long n : {100L, 200L, 400L}) {
            Real log_nun = log(Real::of(nu_n(x, n), 192), 192);
            double dev = std::abs(log_nun.to_double() / n - log_nu.to_double());
            double bound = 2.0 * std::log(den(x).get_d()) / n;
            CHECK(dev <= bound);
        }
    }
}

TEST_CASE("factorize and divisors") {
    auto f = factorize(BigInt(2L * 2 * 3 * 3 * 3 * 50021));
    CHECK(f[BigInt(2)] == 2);
    CHECK(f[BigInt(3)] == 3);
    CHECK(f[BigInt(50021)] == 1);
    auto ds = divisors(BigInt(12));
    CHECK(ds == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("rationals stay in lowest terms through ops") {
    Rational a = make_rational(6, 4), b = make_rational(10, 15);
    Rational c = a * b + a / b - pochhammer(a, 2);
    CHECK(gcd_int(num(c), den(c)) == 1);
    CHECK(den(c) >= 1);
}
