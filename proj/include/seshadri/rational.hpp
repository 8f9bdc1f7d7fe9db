#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace seshadri {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

/// Floor of sqrt(n) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

/// ceil(a/b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    return (a + b - 1) / b;
}

inline Rational make_fraction(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rational(num, den);
}

/// Parses "p" or "p/q" (optional leading sign). Throws on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& x);

}  // namespace seshadri
