#include "seshadri/exact_value.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace seshadri {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed rational literal");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("malformed rational literal");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("malformed rational literal");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    return make_fraction(Int(num), Int(den));
}

std::string rational_to_string(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

ExactValue::ExactValue(Rational q, Rational r, Int d)
    : q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("negative radicand");
    normalize();
}

void ExactValue::normalize() {
    if (r_ == 0) {
        d_ = 0;
        return;
    }
    Int root = isqrt(d_);
    if (root * root == d_) {  // covers d = 0 and d = 1
        q_ += r_ * Rational(root);
        r_ = 0;
        d_ = 0;
    }
}

ExactValue ExactValue::rational(const Int& p, const Int& q) {
    return ExactValue(make_fraction(p, q));
}

ExactValue ExactValue::surd(const Rational& r, const Int& d) {
    return ExactValue(Rational(0), r, d);
}

ExactValue make_rational(const Int& p, const Int& q) { return ExactValue::rational(p, q); }
ExactValue make_surd(const Rational& r, const Int& d) { return ExactValue::surd(r, d); }

const Rational& ExactValue::as_rational() const {
    if (!is_rational()) throw std::domain_error("value is irrational");
    return q_;
}

namespace {

// Sign of q + r*sqrt(d); d must be zero or a non-square positive integer
// (i.e. the normalized representation).
int surd_sign(const Rational& q, const Rational& r, const Int& d) {
    if (r == 0) return sign_of(q);
    if (q == 0) return sign_of(r);
    int sq = sign_of(q), sr = sign_of(r);
    if (sq == sr) return sq;
    // Opposite signs: |q| vs |r|*sqrt(d) decided by squaring.
    Rational lhs = q * q;
    Rational rhs = r * r * Rational(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sq : sr;
}

Ordering from_sign(int s) {
    if (s < 0) return Ordering::LT;
    if (s > 0) return Ordering::GT;
    return Ordering::EQ;
}

}  // namespace

int ExactValue::sign() const { return surd_sign(q_, r_, d_); }

ExactValue ExactValue::operator+(const ExactValue& other) const {
    if (r_ == 0) return ExactValue(q_ + other.q_, other.r_, other.d_);
    if (other.r_ == 0) return ExactValue(q_ + other.q_, r_, d_);
    if (d_ != other.d_)
        throw std::domain_error("sum of distinct irrational radicands is not representable");
    return ExactValue(q_ + other.q_, r_ + other.r_, d_);
}

ExactValue ExactValue::operator-(const ExactValue& other) const { return *this + (-other); }

ExactValue ExactValue::operator*(const ExactValue& other) const {
    if (r_ == 0) return ExactValue(q_ * other.q_, q_ * other.r_, other.d_);
    if (other.r_ == 0) return ExactValue(q_ * other.q_, r_ * other.q_, d_);
    if (d_ != other.d_)
        throw std::domain_error("product of distinct irrational radicands is not representable");
    return ExactValue(q_ * other.q_ + r_ * other.r_ * Rational(d_),
                      q_ * other.r_ + r_ * other.q_, d_);
}

ExactValue ExactValue::square() const { return *this * *this; }

Ordering compare(const ExactValue& x, const ExactValue& y) {
    if (x.r_ == 0 || y.r_ == 0 || x.d_ == y.d_) {
        // Difference stays inside a single radicand.
        const Int& d = x.r_ != 0 ? x.d_ : y.d_;
        return from_sign(surd_sign(x.q_ - y.q_, x.r_ - y.r_, d));
    }
    // Distinct irrational radicands: decide sign(Q + A) with Q = qx - qy
    // rational and A = rx*sqrt(dx) - ry*sqrt(dy) via two squaring steps.
    Rational q_diff = x.q_ - y.q_;
    Rational mx = x.r_ * x.r_ * Rational(x.d_);
    Rational my = y.r_ * y.r_ * Rational(y.d_);
    int sx = sign_of(x.r_), sy = sign_of(y.r_);
    int surd_diff_sign;
    if (sx != sy) {
        surd_diff_sign = sx;  // positive minus negative, or vice versa
    } else {
        int mag = mx == my ? 0 : (mx > my ? 1 : -1);
        surd_diff_sign = sx * mag;
    }
    int qs = sign_of(q_diff);
    bool surd_diff_zero = (sx == sy && mx == my);
    if (surd_diff_zero) return from_sign(qs);
    if (qs == 0) return from_sign(surd_diff_sign);
    if (qs == surd_diff_sign) return from_sign(qs);
    // Opposite signs: compare Q^2 against A^2 = mx + my - 2*rx*ry*sqrt(dx*dy).
    Rational u = q_diff * q_diff - mx - my;
    int s2 = surd_sign(u, 2 * x.r_ * y.r_, x.d_ * y.d_);  // sign(Q^2 - A^2)
    if (s2 == 0) return Ordering::EQ;
    return from_sign(s2 > 0 ? qs : surd_diff_sign);
}

bool ExactValue::operator==(const ExactValue& other) const {
    return compare(*this, other) == Ordering::EQ;
}
bool ExactValue::operator<(const ExactValue& other) const {
    return compare(*this, other) == Ordering::LT;
}
bool ExactValue::operator<=(const ExactValue& other) const {
    return compare(*this, other) != Ordering::GT;
}
bool ExactValue::operator>(const ExactValue& other) const {
    return compare(*this, other) == Ordering::GT;
}
bool ExactValue::operator>=(const ExactValue& other) const {
    return compare(*this, other) != Ordering::LT;
}

namespace {

// Floor of (a + b*sqrt(d)) / c for integers a, b, c, d with c > 0, d >= 0.
Int floor_surd_quotient(const Int& a, const Int& b, const Int& d, const Int& c) {
    if (b == 0) {
        Int q = a / c, r = a % c;
        if (r != 0 && (r < 0) != (c < 0)) --q;
        return q;
    }
    Int root = isqrt(b * b * d);              // floor(|b| sqrt(d))
    Int approx = b > 0 ? Int(a + root) : Int(a - root - 1);
    Int n = approx / c;
    if (approx % c != 0 && approx < 0) --n;   // floor division
    // n may be off by one; fix with exact comparisons c*n <= a + b*sqrt(d).
    auto le_value = [&](const Int& k) {
        // c*k <= a + b*sqrt(d)  <=>  0 <= (a - c*k) + b*sqrt(d)
        return surd_sign(Rational(a - c * k), Rational(b), d) >= 0;
    };
    while (!le_value(n)) --n;
    while (le_value(n + 1)) ++n;
    return n;
}

Int pow10(unsigned k) {
    Int p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace

std::string ExactValue::to_decimal(unsigned digits) const {
    int sgn = sign();
    if (sgn == 0) {
        std::string out = "0";
        if (digits > 0) out += "." + std::string(digits, '0');
        return out;
    }
    Rational q = sgn < 0 ? -q_ : q_;
    Rational r = sgn < 0 ? -r_ : r_;
    Int scale = pow10(digits);
    // |x| * 10^digits + 1/2 = (A + B*sqrt(d)) / C
    Int qd = denominator(q), rd = denominator(r);
    Int c = qd * rd * 2;
    Int a = numerator(q) * rd * 2 * scale + qd * rd;
    Int b = numerator(r) * qd * 2 * scale;
    Int n = floor_surd_quotient(a, b, d_, c);
    if (n < 0) n = 0;  // rounding of a tiny positive value
    Int ip = n / scale, fp = n % scale;
    std::string out = sgn < 0 ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        out += "." + std::string(digits - frac.size(), '0') + frac;
    }
    return out;
}

std::string ExactValue::to_string() const {
    if (is_rational()) return rational_to_string(q_);
    std::string surd_part;
    Rational abs_r = r_ < 0 ? -r_ : r_;
    if (abs_r != 1) surd_part = rational_to_string(abs_r) + "·";
    surd_part += "√" + d_.str();
    if (q_ == 0) return (r_ < 0 ? "-" : "") + surd_part;
    return rational_to_string(q_) + (r_ < 0 ? " - " : " + ") + surd_part;
}

ExactValue parse_exact_value(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto take_radical = [](const std::string& t) -> std::string {
        // t is "sqrt(d)" or "√d"; returns d or empty on mismatch.
        if (t.rfind("sqrt(", 0) == 0 && t.back() == ')')
            return t.substr(5, t.size() - 6);
        const std::string root = "√";
        if (t.rfind(root, 0) == 0) return t.substr(root.size());
        return {};
    };
    auto parse_d = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed radicand");
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed radicand");
        return Int(t);
    };
    std::string rad = take_radical(s);
    if (!rad.empty()) return make_surd(Rational(1), parse_d(rad));
    if (s.rfind("-", 0) == 0) {
        rad = take_radical(s.substr(1));
        if (!rad.empty()) return make_surd(Rational(-1), parse_d(rad));
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool star = s[i] == '*';
        bool root = s.compare(i, 3, "√") == 0;
        if (!star && !root) continue;
        std::string coeff = s.substr(0, i);
        std::string rest = star ? take_radical(s.substr(i + 1)) : s.substr(i + 3);
        if (star && rest.empty()) break;
        return make_surd(parse_rational(coeff), parse_d(rest));
    }
    return ExactValue(parse_rational(s));
}

}  // namespace seshadri
