#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shiftlog/bigint.hpp"
#include "shiftlog/interval.hpp"

namespace shiftlog {

/// Exact positive real constant of the form  r * e^s * prod q_i^{e_i}
/// with rational r > 0, rational s and e_i, prime q_i. Its logarithm
/// log r + s + sum e_i log q_i is computable to any requested precision.
class LogExactConstant {
public:
    LogExactConstant() : rational_factor_(1), exp_exponent_(0) {}
    LogExactConstant(Rational rational_factor, Rational exp_exponent,
                     std::vector<std::pair<BigInt, Rational>> prime_powers)
        : rational_factor_(std::move(rational_factor)),
          exp_exponent_(std::move(exp_exponent)),
          prime_powers_(std::move(prime_powers)) {
        if (rational_factor_ <= 0)
            throw std::invalid_argument("LogExactConstant: rational factor must be positive");
        normalize();
    }

    static LogExactConstant one() { return {}; }
    static LogExactConstant of(const Rational& r) { return {r, Rational(0), {}}; }

    const Rational& rational_factor() const { return rational_factor_; }
    const Rational& exp_exponent() const { return exp_exponent_; }
    const std::vector<std::pair<BigInt, Rational>>& prime_powers() const { return prime_powers_; }

    friend LogExactConstant operator*(const LogExactConstant& a, const LogExactConstant& b) {
        std::vector<std::pair<BigInt, Rational>> pp = a.prime_powers_;
        pp.insert(pp.end(), b.prime_powers_.begin(), b.prime_powers_.end());
        return {a.rational_factor_ * b.rational_factor_, a.exp_exponent_ + b.exp_exponent_,
                std::move(pp)};
    }

    /// Interval containing log of the exact value.
    RealInterval log_value(Precision p) const {
        RealInterval acc = log_interval(RealInterval::of(rational_factor_, p + 8));
        acc = acc + RealInterval::of(exp_exponent_, p + 8);
        for (const auto& [q, e] : prime_powers_)
            acc = acc + log_interval(RealInterval::of(q, p + 8)).scaled(e);
        return acc;
    }

    double approx_log() const { return log_value(64).mid().to_double(); }

    std::string str() const {
        std::string out = to_string(rational_factor_);
        if (exp_exponent_ != 0) out += " * e^(" + to_string(exp_exponent_) + ")";
        for (const auto& [q, e] : prime_powers_)
            out += " * " + to_string(q) + "^(" + to_string(e) + ")";
        return out;
    }

private:
    void normalize() {
        std::sort(prime_powers_.begin(), prime_powers_.end());
        std::vector<std::pair<BigInt, Rational>> merged;
        for (auto& [q, e] : prime_powers_) {
            if (!merged.empty() && merged.back().first == q)
                merged.back().second += e;
            else
                merged.emplace_back(q, e);
        }
        std::erase_if(merged, [](const auto& pe) { return pe.second == 0; });
        prime_powers_ = std::move(merged);
    }

    Rational rational_factor_;
    Rational exp_exponent_;
    std::vector<std::pair<BigInt, Rational>> prime_powers_;
};

}  // namespace shiftlog
