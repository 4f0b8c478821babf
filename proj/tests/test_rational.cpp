#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

#include <sstream>

using qeuler::ParseError;
using qeuler::Rational;

TEST_CASE("construction and canonical form") {
    CHECK(Rational().is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6) == Rational(-2, 3));
    // Sign lives in the numerator.
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7).is_zero());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("field axioms on a sample grid") {
    const Rational samples[] = {Rational(0),      Rational(1),  Rational(-1),
                                Rational(2, 3),   Rational(-7), Rational(5, 2),
                                Rational(-3, 11), Rational(10, 4)};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Rational(0) == a);
            CHECK(a * Rational(1) == a);
            CHECK(a - a == Rational(0));
            if (!b.is_zero()) CHECK((a / b) * b == a);
            for (const auto& c : samples) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
}

TEST_CASE("inverse and division errors") {
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-5).inverse() == Rational(-1, 5));
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("pow handles zero and negative exponents") {
    CHECK(Rational(2, 3).pow(0).is_one());
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(5).is_zero());
    CHECK(Rational(0).pow(0).is_one());
    CHECK_THROWS(Rational(0).pow(-1));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(-2).pow(2) == Rational(4));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("integrality and to_long") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(!Rational(5, 3).is_integer());
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK(Rational(-14, 7).to_long() == -2);
    CHECK_THROWS(Rational(1, 2).to_long());
}

TEST_CASE("string round trip") {
    const char* texts[] = {"0", "1", "-1", "2/3", "-7/11", "42", "-5/2"};
    for (const char* t : texts) {
        Rational v = Rational::from_string(t);
        CHECK(v.to_string() == t);
        CHECK(Rational::from_string(v.to_string()) == v);
    }
    // Non-canonical inputs normalize.
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK(Rational::from_string("-4/6").to_string() == "-2/3");
}

TEST_CASE("from_string rejects malformed input") {
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("a"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("/3"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1 /2"), ParseError);
}

TEST_CASE("gcd helper") {
    CHECK(Rational::gcd(Rational(4), Rational(6)) == Rational(2));
    CHECK(Rational::gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
    CHECK(Rational::gcd(Rational(0), Rational(-5)) == Rational(5));
    CHECK(Rational::gcd(Rational(0), Rational(0)).is_zero());
}

TEST_CASE("stream output matches to_string") {
    std::ostringstream os;
    os << Rational(-3, 4);
    CHECK(os.str() == "-3/4");
}

TEST_CASE("large values stay exact") {
    // 2^80 as a rational: exactness beyond 64-bit range.
    Rational v(1);
    for (int i = 0; i < 80; ++i) v = v * Rational(2);
    Rational w = v * Rational(1, 3);
    CHECK(w * Rational(3) == v);
    CHECK(v - v == Rational(0));
    CHECK(v.to_string() == "1208925819614629174706176");
}
