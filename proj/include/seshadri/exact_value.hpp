#pragma once

#include "seshadri/rational.hpp"

#include <string>

namespace seshadri {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// An exact real number of the form q + r*sqrt(d) with q, r rational and d a
/// nonnegative integer. Canonical form: if r = 0 or d is a perfect square the
/// value is stored as a pure rational (r = 0, d = 0). Ordering is decided by
/// sign analysis and squaring only; no floating point is involved anywhere.
///
/// Sums and products are defined within a single radicand (the set
/// {q + r*sqrt(d) : q, r rational} is closed under them). Combining two
/// distinct irrational radicands is a domain error; comparison across
/// radicands is still exact via a second squaring step.
class ExactValue {
public:
    ExactValue() : q_(0), r_(0), d_(0) {}
    ExactValue(Rational rational) : q_(std::move(rational)), r_(0), d_(0) {}
    ExactValue(Rational q, Rational r, Int d);

    static ExactValue rational(const Int& p, const Int& q);
    static ExactValue surd(const Rational& r, const Int& d);

    const Rational& rational_part() const { return q_; }
    const Rational& surd_coefficient() const { return r_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return r_ == 0; }
    /// The rational value; domain error if the value is irrational.
    const Rational& as_rational() const;

    int sign() const;
    bool is_zero() const { return q_ == 0 && r_ == 0; }

    ExactValue operator-() const { return ExactValue(-q_, -r_, d_); }
    ExactValue operator+(const ExactValue& other) const;
    ExactValue operator-(const ExactValue& other) const;
    ExactValue operator*(const ExactValue& other) const;

    /// (q + r*sqrt(d))^2, always representable over the same radicand.
    ExactValue square() const;

    bool operator==(const ExactValue& other) const;
    bool operator<(const ExactValue& other) const;
    bool operator<=(const ExactValue& other) const;
    bool operator>(const ExactValue& other) const;
    bool operator>=(const ExactValue& other) const;

    /// Correctly rounded (half away from zero) decimal rendering with the
    /// requested number of fractional digits. Display only.
    std::string to_decimal(unsigned digits) const;

    /// Exact human-readable form: "p/q", "√d", "r·√d" or "q + r·√d".
    std::string to_string() const;

private:
    Rational q_;
    Rational r_;
    Int d_;

    void normalize();
    friend Ordering compare(const ExactValue&, const ExactValue&);
};

/// Exact mathematical ordering of two values, any radicands.
Ordering compare(const ExactValue& x, const ExactValue& y);

ExactValue make_rational(const Int& p, const Int& q);
ExactValue make_surd(const Rational& r, const Int& d);

/// Accepts "p", "p/q", "sqrt(d)", "r*sqrt(d)", "r√d", "√d".
ExactValue parse_exact_value(const std::string& text);

inline const ExactValue& min(const ExactValue& a, const ExactValue& b) {
    return b < a ? b : a;
}
inline const ExactValue& max(const ExactValue& a, const ExactValue& b) {
    return a < b ? b : a;
}

}  // namespace seshadri
