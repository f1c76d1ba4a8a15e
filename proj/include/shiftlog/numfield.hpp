#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shiftlog/interval.hpp"
#include "shiftlog/polynomial.hpp"
#include "shiftlog/roots.hpp"

namespace shiftlog {

/// Select one root of a polynomial: by index in the canonical
/// (re, im)-midpoint order, or nearest to an exact complex rational target.
struct RootSelector {
    static RootSelector by_index(long i) { return {i, {}, {}, false}; }
    static RootSelector near(Rational re, Rational im) {
        return {-1, std::move(re), std::move(im), true};
    }
    long index = 0;
    Rational near_re, near_im;
    bool is_near = false;
};

struct AmbiguousRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// den(beta): least positive m such that m*beta is an algebraic integer.
/// For primitive a_d X^d + ... + a_0 this is the least divisor m of a_d
/// with a_d | a_{d-i} m^i for all i.
inline BigInt den_algebraic(const IntPolynomial& min_poly) {
    if (min_poly.degree() < 1) throw std::invalid_argument("den_algebraic: degree must be >= 1");
    long d = min_poly.degree();
    BigInt ad = min_poly.lc();
    BigInt a = ad < 0 ? BigInt(-ad) : ad;
    for (const BigInt& m : divisors(a)) {
        bool ok = true;
        BigInt mi = 1;
        for (long i = 1; i <= d && ok; ++i) {
            mi *= m;
            if (!divides(ad, min_poly.coeff(d - i) * mi)) ok = false;
        }
        if (ok) return m;
    }
    throw std::logic_error("den_algebraic: no divisor worked");  // unreachable: m = |a_d| always works
}

/// Exact count of real roots of min_poly in the closed interval [0, 1].
inline long count_roots_in_unit_interval(const IntPolynomial& min_poly) {
    if (!is_squarefree(min_poly)) throw NonSquarefreeError();
    return count_real_roots_closed(min_poly, Rational(0), Rational(1));
}

/// An algebraic number: a primitive squarefree integer polynomial together
/// with certified pairwise-disjoint balls around all its complex roots and a
/// selected root. Irreducibility is assumed, not verified (see assumes_irreducible).
class AlgebraicNumber {
public:
    static AlgebraicNumber create(const IntPolynomial& poly, const RootSelector& sel,
                                  Precision prec = 128, const RootFindOptions& opts = {}) {
        IntPolynomial mp = primitive_part(poly);
        if (mp.degree() < 1) throw std::invalid_argument("AlgebraicNumber: degree must be >= 1");
        AlgebraicNumber a;
        a.min_poly_ = mp;
        a.prec_ = prec;
        a.opts_ = opts;
        a.conjugates_ = find_conjugates(mp, a.target_radius(prec), with_start(opts, prec));
        a.selected_ = resolve_selector(a.conjugates_, sel);
        return a;
    }

    const IntPolynomial& min_poly() const { return min_poly_; }
    long degree() const { return min_poly_.degree(); }
    const std::vector<ComplexBall>& conjugates() const { return conjugates_; }
    int selected_index() const { return selected_; }
    const ComplexBall& selected() const { return conjugates_[selected_]; }
    Precision prec() const { return prec_; }

    /// New value re-certified at doubled precision; the selected root follows.
    /// The certification cap stretches along so refinement depth is not limited
    /// by the options the value was first created with.
    AlgebraicNumber refined() const {
        AlgebraicNumber a;
        a.min_poly_ = min_poly_;
        a.prec_ = prec_ * 2;
        a.opts_ = opts_;
        a.opts_.prec_cap = std::max(a.opts_.prec_cap, 4 * a.prec_);
        a.conjugates_ =
            find_conjugates(min_poly_, a.target_radius(a.prec_), with_start(a.opts_, a.prec_));
        a.selected_ = match_ball(a.conjugates_, selected());
        return a;
    }

private:
    Real target_radius(Precision p) const {
        // scale-aware target: roughly unit-ulp at p/2 bits relative to root size
        double bound = 1.0;
        for (const auto& c : min_poly_.coeffs()) {
            double l = std::abs(mpz_get_d(c.get_mpz_t()));
            bound = std::max(bound, l);
        }
        Real t = mul_2si(Real::of(1L + static_cast<long>(std::log2(bound)), 32),
                         -static_cast<long>(p) / 2, 32, MPFR_RNDU);
        return t;
    }
    static RootFindOptions with_start(RootFindOptions o, Precision p) {
        o.start_prec = std::max(o.start_prec, p);
        return o;
    }

    static int resolve_selector(const std::vector<ComplexBall>& balls, const RootSelector& sel) {
        if (!sel.is_near) {
            if (sel.index < 0 || sel.index >= static_cast<long>(balls.size()))
                throw std::invalid_argument("root index out of range");
            return static_cast<int>(sel.index);
        }
        Precision p = balls[0].prec() + 16;
        std::vector<Real> dist;
        dist.reserve(balls.size());
        for (const auto& b : balls) {
            Real dx = sub(b.re(), Real::of(sel.near_re, p), p);
            Real dy = sub(b.im(), Real::of(sel.near_im, p), p);
            dist.push_back(hypot(dx, dy, 64, MPFR_RNDN));
        }
        int best = 0;
        for (size_t i = 1; i < balls.size(); ++i)
            if (dist[i] < dist[best]) best = static_cast<int>(i);
        for (size_t i = 0; i < balls.size(); ++i) {
            if (static_cast<int>(i) == best) continue;
            Real margin_best = rad::add(rad::up(dist[best]), balls[best].radius());
            Real margin_other = sub(round_to(dist[i], kRadPrec, MPFR_RNDD), balls[i].radius(),
                                    kRadPrec, MPFR_RNDD);
            if (!(margin_best < margin_other))
                throw AmbiguousRootError("root selector 'near' is ambiguous between two roots");
        }
        return best;
    }

    static int match_ball(const std::vector<ComplexBall>& balls, const ComplexBall& prev) {
        Precision p = balls[0].prec() + 16;
        int best = 0;
        Real bd = Real::pos_inf();
        for (size_t i = 0; i < balls.size(); ++i) {
            Real dx = sub(balls[i].re(), prev.re(), p);
            Real dy = sub(balls[i].im(), prev.im(), p);
            Real di = hypot(dx, dy, 64);
            if (di < bd) {
                bd = di;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    IntPolynomial min_poly_;
    std::vector<ComplexBall> conjugates_;
    int selected_ = 0;
    Precision prec_ = 128;
    RootFindOptions opts_;
};

/// Is the root inside this certified ball real? Decided exactly via Sturm
/// counting on the ball's real section; nullopt means undecided at this
/// radius (refine and retry).
inline std::optional<bool> certified_real(const IntPolynomial& min_poly, const ComplexBall& ball) {
    Rational im_q = ball.im().to_rational();
    Rational rad_q = ball.radius().to_rational();
    if (abs(im_q) > rad_q) return false;
    Rational sigma = rad_q * rad_q - im_q * im_q;  // >= 0 here
    // lower bound on sqrt(sigma): real roots in [re - s, re + s] lie inside the disk
    Real s = sqrt(Real::of(sigma, 96, MPFR_RNDD), 96, MPFR_RNDD);
    Rational s_lo = s.to_rational();
    if (s_lo < 0) s_lo = 0;
    Rational re_q = ball.re().to_rational();
    if (count_real_roots_closed(min_poly, re_q - s_lo, re_q + s_lo) >= 1) return true;
    return std::nullopt;
}

/// Element g(gamma) of the field Q[Y]/(m_gamma(Y)), gamma a root of m_gamma.
class FieldElement {
public:
    FieldElement(IntPolynomial field, const RatPolynomial& rep)
        : field_(std::move(field)) {
        if (field_.degree() < 1) throw std::invalid_argument("FieldElement: field degree must be >= 1");
        rep_ = reduce(rep);
    }

    static FieldElement zero(const IntPolynomial& field) { return {field, RatPolynomial{}}; }
    static FieldElement one(const IntPolynomial& field) {
        return {field, RatPolynomial::constant(Rational(1))};
    }
    static FieldElement generator(const IntPolynomial& field) {
        return {field, RatPolynomial::identity()};
    }
    static FieldElement constant(const IntPolynomial& field, const Rational& c) {
        return {field, RatPolynomial::constant(c)};
    }

    const IntPolynomial& field() const { return field_; }
    const RatPolynomial& rep() const { return rep_; }
    long field_degree() const { return field_.degree(); }
    bool is_zero() const { return rep_.is_zero(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return {a.field_, a.rep_ + b.rep_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return {a.field_, a.rep_ - b.rep_};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return {a.field_, a.rep_ * b.rep_};
    }

    ComplexBall eval_at(const ComplexBall& gamma) const { return eval_poly(rep_, gamma); }

private:
    void check_same(const FieldElement& o) const {
        if (!(field_ == o.field_)) throw std::invalid_argument("FieldElement: mixed fields");
    }
    RatPolynomial reduce(const RatPolynomial& p) const {
        if (p.degree() < field_.degree()) return p;
        return divrem(p, to_rational(field_)).second;
    }

    IntPolynomial field_;
    RatPolynomial rep_;
};

namespace detail {

/// Extended Euclid over Q[Y]: returns (g, u, v) with u a + v b = g.
inline std::tuple<RatPolynomial, RatPolynomial, RatPolynomial> ext_gcd(RatPolynomial a,
                                                                       RatPolynomial b) {
    RatPolynomial u0 = RatPolynomial::constant(Rational(1)), v0{};
    RatPolynomial u1{}, v1 = RatPolynomial::constant(Rational(1));
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        RatPolynomial u2 = u0 - q * u1, v2 = v0 - q * v1;
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {a, u0, v0};
}

}  // namespace detail

/// Multiplicative inverse in Q[Y]/(m); the product is verified to reduce to 1.
inline FieldElement field_inverse(const FieldElement& e) {
    if (e.is_zero()) throw std::domain_error("field_inverse: zero element");
    auto [g, u, v] = detail::ext_gcd(e.rep(), to_rational(e.field()));
    if (g.degree() != 0)
        throw std::domain_error("field_inverse: element shares a factor with the field polynomial "
                                "(field polynomial is reducible)");
    FieldElement inv(e.field(), u.scaled(Rational(1) / g.coeff(0)));
    FieldElement check = inv * e;
    if (!(check.rep() == RatPolynomial::constant(Rational(1))))
        throw std::logic_error("field_inverse: verification e * inv != 1 failed");
    return inv;
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * field_inverse(b);
}

/// Characteristic polynomial of g(gamma) over Q: the monic degree-d rational
/// polynomial with roots g(sigma_k(gamma)) (with multiplicity), obtained by
/// exact elimination of Y from (m(Y), X - g(Y)); evaluated at X = 0..d
/// through univariate resultants and interpolated back.
inline RatPolynomial element_charpoly(const FieldElement& e) {
    long d = e.field_degree();
    RatPolynomial m = to_rational(e.field());
    std::vector<Rational> nodes, values;
    for (long j = 0; j <= d; ++j) {
        RatPolynomial second = RatPolynomial::constant(Rational(j)) - e.rep();
        nodes.emplace_back(j);
        values.push_back(resultant(m, second));
    }
    // Lagrange interpolation on d+1 nodes
    RatPolynomial acc;
    for (long j = 0; j <= d; ++j) {
        RatPolynomial basis = RatPolynomial::constant(Rational(1));
        Rational denom(1);
        for (long k = 0; k <= d; ++k) {
            if (k == j) continue;
            basis = basis * RatPolynomial({Rational(-k), Rational(1)});
            denom *= Rational(j - k);
        }
        acc = acc + basis.scaled(values[j] / denom);
    }
    if (acc.degree() != d) throw std::logic_error("element_charpoly: degree mismatch");
    return monic(acc);
}

/// Minimal polynomial of g(gamma) as a primitive integer polynomial, plus the
/// multiplicity k with charpoly = minpoly^k (verified exactly; failure is fatal).
inline std::pair<IntPolynomial, long> element_minpoly(const FieldElement& e) {
    RatPolynomial cp = element_charpoly(e);
    RatPolynomial sf = squarefree_part(cp);
    long d = e.field_degree(), ds = sf.degree();
    if (ds < 1 || d % ds != 0)
        throw std::logic_error("element_minpoly: squarefree part degree does not divide d");
    long k = d / ds;
    if (!(sf.pow(static_cast<unsigned long>(k)) == cp))
        throw std::logic_error("element_minpoly: charpoly != minpoly^k (arithmetic bug)");
    return {primitive_int(sf).first, k};
}

/// Weil absolute logarithmic height of g(gamma) via the Mahler-measure form:
/// h = (1/d)(log lc + sum_k log+ |g(sigma_k(gamma))|), lc the positive leading
/// coefficient of the primitive integer form of the characteristic polynomial.
inline RealInterval weil_height(const FieldElement& e, const AlgebraicNumber& gamma) {
    if (!(gamma.min_poly() == e.field()))
        throw std::invalid_argument("weil_height: gamma does not generate this field");
    long d = e.field_degree();
    RatPolynomial cp = element_charpoly(e);
    IntPolynomial ip = primitive_int(cp).first;
    Precision p = gamma.prec();
    RealInterval acc = log_interval(RealInterval::of(ip.lc(), p));
    for (const auto& conj : gamma.conjugates()) {
        RealInterval a = e.eval_at(conj).abs_interval();
        acc = acc + log_plus_interval(a);
    }
    return acc.scaled(make_rational(1, d));
}

/// Height of a rational number: log max(|num|, den).
inline RealInterval height_rational(const Rational& q, Precision p = 64) {
    BigInt n = num(q) < 0 ? BigInt(-num(q)) : num(q);
    BigInt m = n > den(q) ? n : den(q);
    if (m == 1) return RealInterval::of(Rational(0), p);
    return log_interval(RealInterval::of(m, p));
}

}  // namespace shiftlog
