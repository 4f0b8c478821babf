#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qeuler/errors.hpp"
#include "qeuler/parser.hpp"

using namespace qeuler;

namespace {
VarSetPtr vars3() { return VarSet::make({"x", "y", "q"}); }
}  // namespace

TEST_CASE("literals variables and operators") {
    auto v = vars3();
    CHECK(parse_poly("0", v).is_zero());
    CHECK(parse_poly("42", v) == MPoly<Rational>::constant(v, Rational(42)));
    CHECK(parse_poly("-5/2", v) == MPoly<Rational>::constant(v, Rational(-5, 2)));
    CHECK(parse_poly("x", v) == MPoly<Rational>::variable(v, 0));
    CHECK(parse_poly("x + y", v) == parse_poly("y + x", v));
    CHECK(parse_poly("x - x", v).is_zero());
    CHECK(parse_poly("2*x*y", v) ==
          MPoly<Rational>::monomial_term(v, Monomial{1, 1, 0}, Rational(2)));
}

TEST_CASE("precedence and associativity") {
    auto v = vars3();
    CHECK(parse_poly("x + y*q", v) != parse_poly("(x + y)*q", v));
    CHECK(parse_poly("x + y*q", v) ==
          parse_poly("x", v) + parse_poly("y", v) * parse_poly("q", v));
    CHECK(parse_poly("x - y - q", v) == parse_poly("(x - y) - q", v));
    CHECK(parse_poly("x^2*y", v) == parse_poly("(x^2)*y", v));
    CHECK(parse_poly("2*x^3", v) ==
          MPoly<Rational>::monomial_term(v, Monomial{3, 0, 0}, Rational(2)));
    CHECK(parse_poly("-x^2", v) == -parse_poly("x^2", v));
    CHECK(parse_poly("1/2*x", v) ==
          MPoly<Rational>::monomial_term(v, Monomial{1, 0, 0}, Rational(1, 2)));
}

TEST_CASE("unary minus and parentheses") {
    auto v = vars3();
    CHECK(parse_poly("-(x - y)", v) == parse_poly("y - x", v));
    CHECK(parse_poly("-(-x)", v) == parse_poly("x", v));
    CHECK(parse_poly("((x))", v) == parse_poly("x", v));
    CHECK(parse_poly("x*(-2)", v) == parse_poly("-2*x", v));
}

TEST_CASE("exponent rules") {
    auto v = vars3();
    CHECK(parse_poly("x^0", v) == MPoly<Rational>::constant(v, Rational(1)));
    CHECK(parse_poly("x^1", v) == parse_poly("x", v));
    CHECK(parse_poly("(x + y)^2", v) == parse_poly("x^2 + 2*x*y + y^2", v));
    CHECK_THROWS_AS(parse_poly("x^-1", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x^y", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x^(2)", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x^1/2", v), ParseError);
}

TEST_CASE("whitespace is insignificant") {
    auto v = vars3();
    CHECK(parse_poly("  x\t+ 2 * y ", v) == parse_poly("x + 2*y", v));
    CHECK(parse_poly("x^2-y", v) == parse_poly("x^2 - y", v));
}

TEST_CASE("malformed input raises ParseError") {
    auto v = vars3();
    CHECK_THROWS_AS(parse_poly("", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", v), ParseError);
    CHECK_THROWS_AS(parse_poly("* x", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x y", v), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_poly("2x", v), ParseError);       // implicit multiplication
    CHECK_THROWS_AS(parse_poly("(x", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x)", v), ParseError);
    CHECK_THROWS_AS(parse_poly("z + 1", v), ParseError);    // undeclared identifier
    CHECK_THROWS_AS(parse_poly("x $ y", v), ParseError);    // stray character
    CHECK_THROWS_AS(parse_poly("x / y", v), ParseError);    // division is not in the grammar
    CHECK_THROWS_AS(parse_poly("1..2", v), ParseError);
}

TEST_CASE("parse errors carry a position") {
    auto v = vars3();
    try {
        parse_poly("x + zz", v);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("round trip: parse of printed form is the identity") {
    auto v = vars3();
    const char* samples[] = {
        "0",
        "1",
        "-1/3",
        "x",
        "x^2 - y + 1/2",
        "3*x*y^2 - q",
        "x^3 + 3*x^2*y + 3*x*y^2 + y^3",
        "-2*x^5*y^2*q^3 + 7/11*y",
    };
    for (const char* s : samples) {
        MPoly<Rational> p = parse_poly(s, v);
        CHECK(p.to_string() == s);
        CHECK(parse_poly(p.to_string(), v) == p);
    }
}

TEST_CASE("printed form of random-ish expressions reparses equal") {
    auto v = vars3();
    const char* exprs[] = {
        "(x + y)*(x - y) + y^2",
        "-(x - 2)*(x + 2) - 4",
        "((x + q)^3 - x^3 - q^3)",
        "1/3*(x + y + q)^2",
    };
    for (const char* s : exprs) {
        MPoly<Rational> p = parse_poly(s, v);
        CHECK(parse_poly(p.to_string(), v) == p);
    }
}
