#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <utility>

#include "shiftlog/measure.hpp"
#include "shiftlog/numfield.hpp"

namespace shiftlog {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t column)
        : std::runtime_error(msg + " (column " + std::to_string(column + 1) + ")"), col(column) {}
    size_t col;
};

namespace detail {

/// Recursive-descent scanner shared by the rational/complex/expression parsers.
struct Scanner {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    /// Unsigned decimal literal, possibly with a fractional part: "12", "0.855".
    Rational unsigned_decimal() {
        skip_ws();
        size_t start = pos;
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
        if (digits.empty() && !(pos < s.size() && s[pos] == '.')) fail("expected a number");
        std::string frac;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac += s[pos++];
            if (digits.empty() && frac.empty()) {
                pos = start;
                fail("expected digits around '.'");
            }
        }
        BigInt n(digits.empty() ? std::string("0") : digits, 10);
        if (!frac.empty()) {
            BigInt f(frac, 10);  // base forced: "0916" must not autodetect as octal
            BigInt scale = pow_int(10, static_cast<unsigned long>(frac.size()));
            return make_rational(n * scale + f, scale);
        }
        return Rational(n);
    }
};

}  // namespace detail

/// Parse "a", "a/b", "a.b" (exact decimal) with optional sign.
inline Rational parse_exact_number(const std::string& str) {
    detail::Scanner sc{str};
    bool neg = sc.eat('-');
    if (!neg) sc.eat('+');
    Rational v = sc.unsigned_decimal();
    if (sc.eat('/')) {
        Rational d = sc.unsigned_decimal();
        if (d == 0) sc.fail("zero denominator");
        v /= d;
    }
    sc.skip_ws();
    if (sc.pos != sc.s.size()) sc.fail("trailing characters in number");
    return neg ? Rational(-v) : v;
}

/// Parse a complex literal: "2", "-13.07", "2i", "1.48i", "-0.855+1.48i",
/// "9765625+9765625i". Components are exact decimals or fractions.
inline std::pair<Rational, Rational> parse_complex(const std::string& str) {
    detail::Scanner sc{str};
    auto signed_part = [&](bool sign_required) -> std::optional<std::pair<Rational, bool>> {
        sc.skip_ws();
        if (sc.pos == sc.s.size()) return std::nullopt;
        bool neg = false;
        if (sc.peek() == '+' || sc.peek() == '-') {
            neg = sc.s[sc.pos] == '-';
            ++sc.pos;
        } else if (sign_required) {
            sc.fail("expected '+' or '-' before imaginary part");
        }
        sc.skip_ws();
        Rational mag(1);
        bool have_digits = sc.peek() != 'i';
        if (have_digits) {
            mag = sc.unsigned_decimal();
            if (sc.eat('/')) {
                Rational d = sc.unsigned_decimal();
                if (d == 0) sc.fail("zero denominator");
                mag /= d;
            }
        }
        bool imag = sc.eat('i');
        if (!have_digits && !imag) sc.fail("expected number or 'i'");
        return std::make_pair(neg ? Rational(-mag) : mag, imag);
    };

    Rational re(0), im(0);
    auto first = signed_part(false);
    if (!first) throw ParseError("empty complex literal", 0);
    if (first->second)
        im = first->first;
    else
        re = first->first;
    auto second = signed_part(true);
    if (second) {
        if (!second->second) sc.fail("second component must be imaginary (suffix 'i')");
        if (first->second) sc.fail("two imaginary components");
        im = second->first;
    }
    sc.skip_ws();
    if (sc.pos != sc.s.size()) sc.fail("trailing characters in complex literal");
    return {re, im};
}

/// Parse "index:K" or "near:a+bi" into a RootSelector.
inline RootSelector parse_root_selector(const std::string& str) {
    auto colon = str.find(':');
    std::string kind = str.substr(0, colon == std::string::npos ? str.size() : colon);
    std::string rest = colon == std::string::npos ? "" : str.substr(colon + 1);
    if (kind == "index") {
        if (rest.empty()) throw ParseError("index selector needs a number", kind.size());
        return RootSelector::by_index(std::stol(rest));
    }
    if (kind == "near") {
        auto [re, im] = parse_complex(rest);
        return RootSelector::near(re, im);
    }
    throw ParseError("root selector must be 'index:K' or 'near:a+bi', got '" + str + "'", 0);
}

/// Field-expression parser: +, -, *, /, ^ (non-negative integer exponent),
/// parentheses, rationals, and the generator written Y (or y).
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+')* primary ('^' uint)?
///   primary := number | 'Y' | '(' expr ')'
inline FieldElement parse_field_expr(const std::string& str, const IntPolynomial& field) {
    struct P {
        detail::Scanner sc;
        const IntPolynomial& field;

        FieldElement expr() {
            FieldElement v = term();
            for (;;) {
                if (sc.eat('+'))
                    v = v + term();
                else if (sc.eat('-'))
                    v = v - term();
                else
                    return v;
            }
        }
        FieldElement term() {
            FieldElement v = factor();
            for (;;) {
                if (sc.eat('*'))
                    v = v * factor();
                else if (sc.eat('/'))
                    v = v / factor();
                else
                    return v;
            }
        }
        FieldElement factor() {
            bool neg = false;
            for (;;) {
                if (sc.eat('-'))
                    neg = !neg;
                else if (sc.eat('+'))
                    ;
                else
                    break;
            }
            FieldElement v = primary();
            if (sc.eat('^')) {
                sc.skip_ws();
                Rational e = sc.unsigned_decimal();
                if (!is_integer(e)) sc.fail("exponent must be an integer");
                unsigned long k = num(e).get_ui();
                FieldElement acc = FieldElement::one(field);
                FieldElement base = v;
                while (k) {
                    if (k & 1) acc = acc * base;
                    base = base * base;
                    k >>= 1;
                }
                v = acc;
            }
            if (neg) v = FieldElement::zero(field) - v;
            return v;
        }
        FieldElement primary() {
            char c = sc.peek();
            if (c == '(') {
                sc.eat('(');
                FieldElement v = expr();
                if (!sc.eat(')')) sc.fail("missing ')'");
                return v;
            }
            if (c == 'Y' || c == 'y') {
                ++sc.pos;
                return FieldElement::generator(field);
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                Rational v = sc.unsigned_decimal();
                return FieldElement::constant(field, v);
            }
            sc.fail(std::string("unexpected character '") + c + "'");
        }
    } p{{str}, field};

    FieldElement v = p.expr();
    p.sc.skip_ws();
    if (p.sc.pos != p.sc.s.size()) p.sc.fail("trailing characters in expression");
    return v;
}

/// How beta is specified: either a minimal polynomial with a root selector, or
/// an expression in the generator of an auxiliary field.
struct BetaSpec {
    std::optional<IntPolynomial> poly;
    std::optional<RootSelector> root;

    std::optional<IntPolynomial> field_poly;
    std::optional<RootSelector> field_root;
    std::optional<std::string> expr;

    std::string echo;  // human-readable input echo

    static BetaSpec direct(IntPolynomial p, std::optional<RootSelector> sel = std::nullopt) {
        BetaSpec b;
        b.echo = "poly " + poly_to_string(p, "X");
        b.poly = std::move(p);
        b.root = sel;
        return b;
    }
    static BetaSpec via_field(IntPolynomial fp, RootSelector fsel, std::string expression) {
        BetaSpec b;
        b.echo = "expr " + expression + " over " + poly_to_string(fp, "Y");
        b.field_poly = std::move(fp);
        b.field_root = fsel;
        b.expr = std::move(expression);
        return b;
    }
};

/// A resolved beta: certified AlgebraicNumber plus entry metadata.
struct ResolvedBeta {
    AlgebraicNumber beta;
    bool assumes_irreducible;  // true for direct polynomial entry
    long charpoly_power = 1;   // k with charpoly = minpoly^k (expression entry)
    std::string echo;
};

/// Resolve a BetaSpec to a certified algebraic number. For expression entry
/// the minimal polynomial of beta is derived exactly (element_minpoly) and the
/// right root is identified by matching the numeric image of the expression,
/// refining until the image ball meets exactly one candidate root ball.
inline ResolvedBeta resolve_beta(const BetaSpec& spec, Precision prec = 256,
                                 Precision prec_cap = 16384) {
    if (spec.poly.has_value()) {
        RootSelector sel = spec.root.value_or(RootSelector::by_index(0));
        if (!spec.root.has_value() && spec.poly->degree() > 1)
            throw ParseError("a root selector is required when deg > 1", 0);
        return {AlgebraicNumber::create(*spec.poly, sel, prec), true, 1, spec.echo};
    }
    if (!spec.field_poly.has_value() || !spec.expr.has_value() || !spec.field_root.has_value())
        throw ParseError("beta spec needs either poly+root or field-poly+field-root+expr", 0);

    FieldElement e = parse_field_expr(*spec.expr, primitive_part(*spec.field_poly));
    if (e.rep().is_zero()) throw ParseError("expression evaluates to zero", 0);
    auto [mp, k] = element_minpoly(e);
    if (mp.degree() < 1) throw ParseError("expression is rational, not an algebraic irrational", 0);

    AlgebraicNumber gamma =
        AlgebraicNumber::create(primitive_part(*spec.field_poly), *spec.field_root, prec);
    for (;;) {
        ComplexBall image = e.eval_at(gamma.selected());
        // candidate roots of mp at comparable precision
        AlgebraicNumber cand = AlgebraicNumber::create(mp, RootSelector::by_index(0), gamma.prec());
        int hit = -1;
        bool unique = true;
        for (size_t i = 0; i < cand.conjugates().size(); ++i) {
            const auto& b = cand.conjugates()[i];
            Real gap = ComplexBall::mid_distance_lower(image, b);
            if (gap <= rad::add(image.radius(), b.radius())) {
                if (hit >= 0) unique = false;
                hit = static_cast<int>(i);
            }
        }
        if (hit >= 0 && unique) {
            AlgebraicNumber beta = AlgebraicNumber::create(
                mp, RootSelector::by_index(hit), gamma.prec());
            return {beta, false, k, spec.echo};
        }
        if (gamma.prec() * 2 > prec_cap)
            throw PrecisionCapError(prec_cap, "cannot isolate the image root of the expression");
        gamma = gamma.refined();
    }
}

}  // namespace shiftlog
