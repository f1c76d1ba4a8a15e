#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftlog/ball.hpp"
#include "shiftlog/bigint.hpp"

namespace shiftlog {

/// Dense polynomial, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lc() const {
        if (is_zero()) throw std::logic_error("Polynomial::lc of zero polynomial");
        return c_.back();
    }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(long k) const { return (k >= 0 && k < static_cast<long>(c_.size())) ? c_[k] : T(0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<T> r = a.c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const T& s) const {
        std::vector<T> r = c_;
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }
    Polynomial shifted_up(long k) const {  // multiply by X^k
        if (is_zero()) return {};
        std::vector<T> r(c_.size() + k, T(0));
        std::copy(c_.begin(), c_.end(), r.begin() + k);
        return Polynomial(std::move(r));
    }

    Polynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned long k) const {
        Polynomial acc = constant(T(1)), base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    template <class V>
    V eval_horner(const V& x, const V& zero) const {
        V acc = zero;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + coeff_to<V>(*it, x);
        return acc;
    }

private:
    template <class V>
    static V coeff_to(const T& c, const V& model);

    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <>
template <>
inline Rational Polynomial<Rational>::coeff_to<Rational>(const Rational& c, const Rational&) {
    return c;
}
template <>
template <>
inline Rational Polynomial<BigInt>::coeff_to<Rational>(const BigInt& c, const Rational&) {
    return Rational(c);
}
template <>
template <>
inline ComplexBall Polynomial<BigInt>::coeff_to<ComplexBall>(const BigInt& c, const ComplexBall& m) {
    return ComplexBall::exact(Rational(c), m.prec());
}
template <>
template <>
inline ComplexBall Polynomial<Rational>::coeff_to<ComplexBall>(const Rational& c, const ComplexBall& m) {
    return ComplexBall::exact(c, m.prec());
}

inline Rational eval_poly(const RatPolynomial& p, const Rational& x) {
    return p.eval_horner<Rational>(x, Rational(0));
}
inline Rational eval_poly(const IntPolynomial& p, const Rational& x) {
    return p.eval_horner<Rational>(x, Rational(0));
}
inline ComplexBall eval_poly(const IntPolynomial& p, const ComplexBall& z) {
    return p.eval_horner<ComplexBall>(z, ComplexBall(z.prec()));
}
inline ComplexBall eval_poly(const RatPolynomial& p, const ComplexBall& z) {
    return p.eval_horner<ComplexBall>(z, ComplexBall(z.prec()));
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

/// Quotient and remainder over the rationals.
inline std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    long db = b.degree();
    if (a.degree() < db) return {RatPolynomial{}, a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational f = r[i] / b.lc();
        if (f == 0) continue;
        q[i - db] = f;
        for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

inline RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.lc());
}

/// Monic gcd over the rationals (Euclid).
inline RatPolynomial gcd_poly(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline bool is_squarefree(const RatPolynomial& p) {
    if (p.degree() <= 1) return !p.is_zero();
    return gcd_poly(p, p.derivative()).degree() == 0;
}
inline bool is_squarefree(const IntPolynomial& p) { return is_squarefree(to_rational(p)); }

/// Content (gcd of coefficients) of an integer polynomial, nonnegative.
inline BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = gcd_int(g, c);
    return g;
}

/// Primitive integer form of a rational polynomial: the unique integer
/// polynomial with content 1 and positive leading coefficient that is a
/// rational multiple of p. Also returns the scale s with s*p = result.
inline std::pair<IntPolynomial, Rational> primitive_int(const RatPolynomial& p) {
    if (p.is_zero()) return {IntPolynomial{}, Rational(1)};
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm_int(l, den(c));
    std::vector<BigInt> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(num(c) * exact_div(l, den(c)));
    IntPolynomial ip(std::move(ic));
    BigInt g = content(ip);
    std::vector<BigInt> pc;
    pc.reserve(ip.coeffs().size());
    int lead_sign = ip.lc() < 0 ? -1 : 1;
    BigInt gg = g * lead_sign;
    for (const auto& c : ip.coeffs()) pc.push_back(exact_div(c, gg));
    return {IntPolynomial(std::move(pc)), make_rational(l, gg)};
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
    return primitive_int(to_rational(p)).first;
}

/// Squarefree part (radical) of p over the rationals, monic.
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
    if (p.degree() <= 0) return monic(p);
    auto g = gcd_poly(p, p.derivative());
    if (g.degree() == 0) return monic(p);
    auto [q, r] = divrem(p, g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division");
    return monic(q);
}

/// Resultant over the rationals via the Euclidean remainder sequence.
inline Rational resultant(RatPolynomial a, RatPolynomial b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    Rational acc(1);
    bool negate = false;
    while (b.degree() > 0) {
        auto [q, r] = divrem(a, b);
        long da = a.degree(), db = b.degree(), dr = r.degree();
        // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da & 1) && (db & 1)) negate = !negate;
        acc *= pow_rat(b.lc(), da - (dr < 0 ? 0 : dr));
        if (r.is_zero()) return Rational(0);  // common factor of positive degree
        a = std::move(b);
        b = std::move(r);
    }
    acc *= pow_rat(b.lc(), a.degree());
    return negate ? -acc : acc;
}

inline int sign_of(const Rational& q) { return sgn(q); }

namespace detail {

/// Sturm chain of p (negated remainder sequence).
inline std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
    std::vector<RatPolynomial> s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero()) {
        auto [q, r] = divrem(s[s.size() - 2], s.back());
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

inline int sign_variations(const std::vector<RatPolynomial>& chain, const Rational& at) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
        int s = sgn(eval_poly(q, at));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

/// Number of distinct real roots of p in the closed interval [a, b].
/// Exact; rational endpoints that are themselves roots are counted.
inline long count_real_roots_closed(const RatPolynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::domain_error("count_real_roots_closed: zero polynomial");
    if (a > b) throw std::invalid_argument("count_real_roots_closed: empty interval");
    RatPolynomial q = p;
    long endpoint_roots = 0;
    for (const Rational& e : {a, b}) {
        if (a == b && endpoint_roots > 0) break;
        if (eval_poly(q, e) == 0) {
            ++endpoint_roots;
            RatPolynomial lin({-e, Rational(1)});
            while (true) {
                auto [quo, rem] = divrem(q, lin);
                if (!rem.is_zero()) break;
                q = quo;
                if (eval_poly(q, e) != 0) break;
            }
        }
    }
    if (q.degree() < 1) return endpoint_roots;
    if (a == b) return endpoint_roots;
    auto chain = detail::sturm_chain(q);
    long inner = detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
    return endpoint_roots + inner;
}

inline long count_real_roots_closed(const IntPolynomial& p, const Rational& a, const Rational& b) {
    return count_real_roots_closed(to_rational(p), a, b);
}

/// Render with the given variable name, highest degree first: "2*z^2 - z + 1".
template <class T>
std::string poly_to_string(const Polynomial<T>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        T c = p.coeff(k);
        if (c == T(0)) continue;
        bool neg = c < T(0);
        T a = neg ? T(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string cs = to_string(a);
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

/// Parse "c0,c1,...,cd" (constant term first) into an integer polynomial.
inline IntPolynomial parse_int_poly(const std::string& s) {
    std::vector<BigInt> c;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty polynomial coefficient");
        tok = tok.substr(b, e - b + 1);
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw std::invalid_argument("bad integer coefficient '" + tok + "'");
        c.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace shiftlog
