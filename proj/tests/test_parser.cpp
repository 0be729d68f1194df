#include "doctest.h"

#include "saito/parser.hpp"

using namespace saito;

namespace {
const std::vector<std::string> UV = {"u1", "u2"};
}

TEST_CASE("basic expressions") {
    Poly a = parse_poly("u1^3 + u2^3", UV);
    CHECK(a == Poly::variable(UV, "u1").pow(3) + Poly::variable(UV, "u2").pow(3));
    Poly b = parse_poly("u1^3*u2^3", UV);
    CHECK(b == Poly::variable(UV, "u1").pow(3) * Poly::variable(UV, "u2").pow(3));
}

TEST_CASE("rational literals and precedence") {
    Poly p = parse_poly("1/2*u1^2 - u2", UV);
    Poly expect = Poly::variable(UV, "u1").pow(2).scaled(Rat(1, 2)) - Poly::variable(UV, "u2");
    CHECK(p == expect);
    // ^ binds tighter than *, * tighter than -
    CHECK(parse_poly("2*u1^2", UV) == Poly::variable(UV, "u1").pow(2).scaled(2));
    CHECK(parse_poly("-u1^2", UV) == -Poly::variable(UV, "u1").pow(2));
    CHECK(parse_poly("(u1 + u2)^2", UV) ==
          parse_poly("u1^2 + 2*u1*u2 + u2^2", UV));
    // left associativity
    CHECK(parse_poly("1 - 2 - 3", UV) == Poly::constant(UV, -4));
}

TEST_CASE("errors carry position info") {
    CHECK_THROWS_AS(parse_poly("u1 + u3", UV), ParseError);
    CHECK_THROWS_AS(parse_poly("u1 u2", UV), ParseError);  // no implicit multiplication
    CHECK_THROWS_AS(parse_poly("u1^(2)", UV), ParseError);
    CHECK_THROWS_AS(parse_poly("u1^-2", UV), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", UV), ParseError);
    CHECK_THROWS_AS(parse_poly("u1 +", UV), ParseError);
    CHECK_THROWS_AS(parse_poly("(u1", UV), ParseError);
    try {
        parse_poly("u1 +\n  $", UV);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
}

TEST_CASE("printer output round-trips through the parser") {
    for (const char* s : {"u1^3 + u2^3", "-u1^2*u2 - u1*u2^2", "1/2*u1^2 - u2", "0", "-5/3",
                          "u1^6 - 2*u1^3*u2^3 + u2^6"}) {
        Poly p = parse_poly(s, UV);
        CHECK(parse_poly(p.to_string(), UV) == p);
    }
}
