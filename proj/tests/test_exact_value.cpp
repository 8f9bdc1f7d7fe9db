#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seshadri/exact_value.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace seshadri;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

// Independent evaluation route: 50-digit decimal floating point. The
// comparison path under test never leaves integer arithmetic, so agreement
// here is a genuine cross-check.
Dec evaluate(const ExactValue& x) {
    Dec q = Dec(numerator(x.rational_part()).str()) /
            Dec(denominator(x.rational_part()).str());
    Dec r = Dec(numerator(x.surd_coefficient()).str()) /
            Dec(denominator(x.surd_coefficient()).str());
    return q + r * sqrt(Dec(x.radicand().str()));
}

}  // namespace

TEST_CASE("rational construction and canonical form") {
    ExactValue x = make_rational(93, 100);
    CHECK(x.is_rational());
    CHECK(x.as_rational() == Rational(93, 100));
    CHECK(make_rational(0, 1).is_zero());
    CHECK(make_rational(220, 21).as_rational() == Rational(220, 21));
    CHECK(make_rational(-4, 8).as_rational() == Rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("surd construction collapses perfect squares") {
    CHECK_FALSE(make_surd(Rational(1), 110).is_rational());
    CHECK(make_surd(Rational(1), 4) == make_rational(2, 1));
    CHECK(make_surd(Rational(3, 2), 9).as_rational() == Rational(9, 2));
    CHECK(make_surd(Rational(5), 0).is_zero());
    CHECK(make_surd(Rational(5), 1).as_rational() == 5);
    CHECK(make_surd(Rational(0), 7).is_zero());
    CHECK_THROWS_AS(ExactValue(Rational(1), Rational(1), Int(-3)), std::domain_error);
}

TEST_CASE("comparisons from the threshold analysis") {
    // (220/21)^2 = 48400/441 < 110 = 48510/441
    CHECK(compare(make_rational(220, 21), make_surd(Rational(1), 110)) == Ordering::LT);
    // (93/100)^2 * 110 = 951390/10000 < 100
    CHECK(compare(make_surd(Rational(93, 100), 110), make_rational(10, 1)) == Ordering::LT);
    ExactValue x = make_surd(Rational(93, 100), 110);
    CHECK(compare(x, x) == Ordering::EQ);
    CHECK(make_rational(220, 21) > make_surd(Rational(93, 100), 110));
    CHECK(make_surd(Rational(-1), 2) < make_rational(-7, 5));
}

TEST_CASE("comparison across distinct radicands") {
    CHECK(compare(make_surd(Rational(1), 12), make_surd(Rational(2), 3)) == Ordering::EQ);
    CHECK(compare(make_surd(Rational(3), 8), make_surd(Rational(6), 2)) == Ordering::EQ);
    // 1 + sqrt(2) = 2.414.. < sqrt(6) = 2.449..
    ExactValue a = ExactValue(Rational(1)) + make_surd(Rational(1), 2);
    CHECK(compare(a, make_surd(Rational(1), 6)) == Ordering::LT);
    // 1 + sqrt(3) = 2.732.. > sqrt(7) = 2.645..
    ExactValue b = ExactValue(Rational(1)) + make_surd(Rational(1), 3);
    CHECK(compare(b, make_surd(Rational(1), 7)) == Ordering::GT);
    CHECK(compare(make_surd(Rational(-2), 2), make_surd(Rational(-1), 7)) == Ordering::LT);
}

TEST_CASE("arithmetic stays within one radicand") {
    ExactValue one_plus_root2 = ExactValue(Rational(1)) + make_surd(Rational(1), 2);
    ExactValue sq = one_plus_root2.square();
    CHECK(sq.rational_part() == 3);
    CHECK(sq.surd_coefficient() == 2);
    CHECK(sq.radicand() == 2);
    CHECK_THROWS_AS(make_surd(Rational(1), 2) + make_surd(Rational(1), 3),
                    std::domain_error);
    CHECK_THROWS_AS(make_surd(Rational(1), 2) * make_surd(Rational(1), 3),
                    std::domain_error);
    // sqrt(2) * sqrt(2) = 2
    CHECK((make_surd(Rational(1), 2) * make_surd(Rational(1), 2)).as_rational() == 2);
}

TEST_CASE("square of a pure surd is r^2 d") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30), rad(0, 200);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        Int d(rad(rng));
        ExactValue sq = make_surd(r, d).square();
        CHECK(sq.is_rational());
        CHECK(sq.as_rational() == r * r * Rational(d));
    }
}

TEST_CASE("decimal rendering") {
    CHECK(make_surd(Rational(1), 110).to_decimal(2) == "10.49");
    CHECK(make_surd(Rational(93, 100), 110).to_decimal(2) == "9.75");
    CHECK(make_rational(220, 21).to_decimal(2) == "10.48");
    CHECK(make_rational(220, 21).to_decimal(0) == "10");
    CHECK(make_rational(1, 2).to_decimal(0) == "1");  // half rounds away from zero
    CHECK(make_rational(-1, 8).to_decimal(3) == "-0.125");
    CHECK(make_rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(make_rational(0, 5).to_decimal(2) == "0.00");
    CHECK(make_rational(7, 1).to_decimal(3) == "7.000");
    CHECK(make_surd(Rational(1), 2).to_decimal(10) == "1.4142135624");
    ExactValue combined = ExactValue(Rational(-3)) + make_surd(Rational(1), 2);
    CHECK(combined.to_decimal(4) == "-1.5858");
}

TEST_CASE("human-readable rendering") {
    CHECK(make_rational(93, 100).to_string() == "93/100");
    CHECK(make_rational(15, 1).to_string() == "15");
    CHECK(make_surd(Rational(1), 110).to_string() == "√110");
    CHECK(make_surd(Rational(93, 100), 110).to_string() == "93/100·√110");
    CHECK(make_surd(Rational(-1), 2).to_string() == "-√2");
    ExactValue combined = ExactValue(Rational(1, 3)) + make_surd(Rational(-2), 5);
    CHECK(combined.to_string() == "1/3 - 2·√5");
}

TEST_CASE("parsing") {
    CHECK(parse_exact_value("220/21") == make_rational(220, 21));
    CHECK(parse_exact_value("-7") == make_rational(-7, 1));
    CHECK(parse_exact_value("sqrt(110)") == make_surd(Rational(1), 110));
    CHECK(parse_exact_value("93/100*sqrt(110)") == make_surd(Rational(93, 100), 110));
    CHECK(parse_exact_value("√110") == make_surd(Rational(1), 110));
    CHECK(parse_exact_value("93/100√110") == make_surd(Rational(93, 100), 110));
    CHECK(parse_exact_value("-√2") == make_surd(Rational(-1), 2));
    CHECK(parse_exact_value("-3/2*sqrt(7)") == make_surd(Rational(-3, 2), 7));
    CHECK_THROWS(parse_exact_value("sqrt(-3)"));
    CHECK_THROWS(parse_exact_value(""));
    CHECK_THROWS(parse_exact_value("1/0"));
}

TEST_CASE("trichotomy and agreement with 50-digit evaluation") {
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 40), rad(0, 130);
    auto random_value = [&]() {
        return ExactValue(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                          Int(rad(rng)));
    };
    int eq_seen = 0;
    for (int i = 0; i < 2000; ++i) {
        ExactValue x = random_value();
        ExactValue y;
        if (i % 5 == 0) {
            // Algebraically equal pair through a different radicand: r*sqrt(d)
            // equals (r/k)*sqrt(k^2 d).
            int k = 2 + (i / 5) % 3;
            y = ExactValue(x.rational_part(), x.surd_coefficient() / k,
                           x.radicand() * k * k);
        } else {
            y = random_value();
        }
        Ordering ord = compare(x, y);
        Ordering rev = compare(y, x);
        CHECK(static_cast<int>(ord) == -static_cast<int>(rev));  // antisymmetry
        Dec diff = evaluate(x) - evaluate(y);
        if (ord == Ordering::EQ) {
            ++eq_seen;
            CHECK(abs(diff) < Dec("1e-35"));
        } else {
            CHECK(abs(diff) > Dec("1e-35"));
            CHECK((diff < 0) == (ord == Ordering::LT));
        }
    }
    CHECK(eq_seen > 100);  // the equality path was actually exercised
}
