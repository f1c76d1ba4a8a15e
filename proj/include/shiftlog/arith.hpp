#pragma once

#include <stdexcept>

#include "shiftlog/bigint.hpp"
#include "shiftlog/logconst.hpp"

namespace shiftlog {

inline void require_shift_range(const Rational& x) {
    if (x < 0 || x >= 1) throw std::domain_error("shift x must satisfy 0 <= x < 1");
}

/// Reduced denominator of a rational.
inline BigInt den_rational(const Rational& x) { return den(x); }

/// Euler's totient via prime factorization.
inline BigInt euler_phi(const BigInt& m) {
    if (m < 1) throw std::domain_error("euler_phi: m must be >= 1");
    BigInt r = m;
    for (const auto& [p, e] : factorize(m)) r = exact_div(r, p) * (p - 1);
    return r;
}

/// nu(x) = den(x) * prod_{q | den(x)} q^{1/(q-1)}, as an exact constant.
inline LogExactConstant nu(const Rational& x) {
    require_shift_range(x);
    BigInt d = den(x);
    std::vector<std::pair<BigInt, Rational>> pp;
    for (const auto& [q, e] : factorize(d)) pp.emplace_back(q, make_rational(1, q - 1));
    return {Rational(d), Rational(0), std::move(pp)};
}

/// nu_n(x) = den(x)^n * prod_{q | den(x)} q^{floor(n/(q-1))}.
inline BigInt nu_n(const Rational& x, long n) {
    require_shift_range(x);
    if (n < 0) throw std::domain_error("nu_n: n must be >= 0");
    BigInt d = den(x);
    BigInt r = pow_int(d, static_cast<unsigned long>(n));
    for (const auto& [q, e] : factorize(d)) {
        BigInt k = BigInt(n) / (q - 1);
        r *= pow_int(q, k.get_ui());
    }
    return r;
}

/// d_n(x) = common denominator of 1/(1+x), ..., 1/(n+x)
///        = lcm_{k=1..n} (k*den(x) + num(x)).
inline BigInt d_n(const Rational& x, long n) {
    require_shift_range(x);
    if (n < 1) throw std::domain_error("d_n: n must be >= 1");
    BigInt d = den(x), a = num(x);
    BigInt l = 1;
    for (long k = 1; k <= n; ++k) l = lcm_int(l, BigInt(k) * d + a);
    return l;
}

/// kappa_n(beta) = den(x) * nu_n(x) * d_n(x) * den(beta)^n.
inline BigInt kappa_n(const BigInt& den_beta, const Rational& x, long n) {
    if (den_beta < 1) throw std::domain_error("kappa_n: den(beta) must be >= 1");
    return den(x) * nu_n(x, n) * d_n(x, n) * pow_int(den_beta, static_cast<unsigned long>(n));
}

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: k must be >= 0");
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

inline BigInt factorial(long k) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace shiftlog
