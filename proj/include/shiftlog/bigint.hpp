#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlog {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt num(const Rational& q) { return q.get_num(); }
inline BigInt den(const Rational& q) { return q.get_den(); }

/// Rational from numerator/denominator, reduced to lowest terms.
inline Rational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long n, long d = 1) {
    return make_rational(BigInt(n), BigInt(d));
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline BigInt pow_int(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& b, long e) {
    if (e >= 0) {
        Rational r(pow_int(num(b), static_cast<unsigned long>(e)),
                   pow_int(den(b), static_cast<unsigned long>(e)));
        r.canonicalize();
        return r;
    }
    if (b == 0) throw std::domain_error("pow_rat: 0 to negative power");
    Rational r(pow_int(den(b), static_cast<unsigned long>(-e)),
               pow_int(num(b), static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; throws if d does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& d) {
    if (!divides(d, a)) throw std::logic_error("exact_div: not divisible");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n, unsigned long seed) {
    // Brent's cycle variant; n odd composite, no small factors.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        BigInt y = rng.get_z_range(n - 3) + 2;
        BigInt c = rng.get_z_range(n - 1) + 1;
        BigInt x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd_int(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd_int(abs(x - ys), n);
            }
        }
        if (d != n) return d;
        ++seed;
    }
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned long>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n, 1);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of n >= 1 (trial division then Pollard rho).
inline std::map<BigInt, unsigned long> factorize(BigInt n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    std::map<BigInt, unsigned long> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (divides(p, n)) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    for (long p = 41; p < 100000 && n > 1; p += 2) {
        if (BigInt(p) * p > n) break;
        while (divides(p, n)) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    detail::factor_into(n, out);
    return out;
}

/// Divisors of n >= 1 in increasing order.
inline std::vector<BigInt> divisors(const BigInt& n) {
    auto f = factorize(n);
    std::vector<BigInt> ds{1};
    for (const auto& [p, e] : f) {
        std::vector<BigInt> next;
        BigInt pk = 1;
        for (unsigned long k = 0; k <= e; ++k) {
            for (const auto& d : ds) next.push_back(d * pk);
            pk *= p;
        }
        ds = std::move(next);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parse "a" or "a/b" into a reduced rational.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (den(q) == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace shiftlog
