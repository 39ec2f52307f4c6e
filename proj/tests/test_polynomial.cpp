#include "doctest.h"
#include "gammagrammar/error.hpp"
#include "gammagrammar/polynomial.hpp"
#include "test_support.hpp"

using namespace gg;
using gg::testing::P;

TEST_CASE("parse") {
    Polynomial p = P("x*y^2 + x*y");
    CHECK(p.size() == 2);
    CHECK(p.coeff(Monomial::from_pairs({{"x", 1}, {"y", 2}})) == 1);
    CHECK(p.coeff(Monomial::from_pairs({{"x", 1}, {"y", 1}})) == 1);

    CHECK(P("0").is_zero());
    CHECK(P("x - x").is_zero());

    Polynomial laurent = P("x^2*y^2*z^-3");
    REQUIRE(laurent.size() == 1);
    CHECK(laurent.terms().begin()->first.exponent("z") == -3);

    CHECK(P(" 3 x ^ 2 ") == P("3*x^2"));
    CHECK(P("-x + 2") == P("2 - x"));
    CHECK(P("x*x*y^-1*y") == P("x^2"));
    CHECK(P("123456789012345678901234567890*t") .coeff(Monomial::var("t")) ==
          Integer("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry offsets") {
    auto offset_of = [](const char* text) -> std::size_t {
        try {
            Polynomial::parse(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("expected ParseError for " << text);
        return 0;
    };
    CHECK(offset_of("x + $y") == 4);
    CHECK(offset_of("x +") == 3);
    CHECK(offset_of("x y") == 2);
    CHECK(offset_of("x^") == 2);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("2*") == 2);
    CHECK_THROWS_AS(Polynomial::parse("(x+y)"), ParseError);
}

TEST_CASE("canonical formatting") {
    CHECK(P("x^2*y*z^2 + x*y^2*z^2 + x^2*y^2*z").to_string() ==
          "x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z");
    CHECK(P("8*x^2 + 20*x + 1").to_string() == "1 + 20*x + 8*x^2");
    CHECK(P("0").to_string() == "0");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("-1").to_string() == "-1");
    CHECK(P("x^-1 + 1").to_string() == "x^-1 + 1");
    CHECK(P("-2*x + y").to_string() == "y - 2*x");
}

TEST_CASE("add and mul") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    Polynomial p = P("x*y^2 + x^2*y");
    CHECK(p + Polynomial() == p);
    CHECK(p + P("x*y^2") == P("2*x*y^2 + x^2*y"));

    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("x*y") * P("x + y") == P("x^2*y + x*y^2"));
    CHECK(P("x") * P("x^-1") == Polynomial(1));
    CHECK(pow(P("1 + x"), 4) == P("1 + 4*x + 6*x^2 + 4*x^3 + x^4"));
    CHECK(pow(P("x + y"), 0) == Polynomial(1));
}

TEST_CASE("substitute") {
    CHECK(substitute(P("u^2*v"), {{"u", P("x + y")}, {"v", P("x*y")}}) == pow(P("x + y"), 2) * P("x*y"));

    // u -> xy, v -> x + y, then y -> 1.
    Polynomial uv = substitute(P("u*v"), {{"u", P("x*y")}, {"v", P("x + y")}});
    CHECK(substitute(uv, "y", Polynomial(1)) == P("x^2 + x"));

    CHECK(substitute(P("x^-1*y"), "x", P("u*v")) == P("u^-1*v^-1*y"));
    CHECK(substitute(P("x^-2"), "x", P("-u")) == P("u^-2"));
    CHECK_THROWS_AS(substitute(P("x^-1"), "x", P("u + v")), NonInvertibleSubstitution);
    CHECK_THROWS_AS(substitute(P("x^-1"), "x", P("2*u")), NonInvertibleSubstitution);
    // positive powers of non-units are fine
    CHECK(substitute(P("x^2"), "x", P("2*u")) == P("4*u^2"));
    // simultaneous, not sequential
    CHECK(substitute(P("x + y"), {{"x", P("y")}, {"y", P("x")}}) == P("x + y"));
    CHECK(substitute(P("x*y"), {{"x", P("y")}, {"y", P("2*x")}}) == P("2*x*y"));
}

TEST_CASE("partial derivative") {
    CHECK(partial(P("x^2*y"), "x") == P("2*x*y"));
    CHECK(partial(P("y^3"), "x").is_zero());
    CHECK(partial(P("x^-2"), "x") == P("-2*x^-3"));
    CHECK(partial(P("7"), "x").is_zero());
}

TEST_CASE("evaluate") {
    CHECK(evaluate(P("1 + 4*x"), {{"x", 1}}) == 5);
    CHECK(evaluate(P("x + 8*x^2 + 6*x^3"), {{"x", 1}}) == 15);
    CHECK(evaluate(P("3 + x*y + x^2"), {{"x", 0}, {"y", 0}}) == 3);
    CHECK(evaluate(P("x^-1"), {{"x", Rational(2)}}) == Rational(1, 2));
    CHECK_THROWS_AS(evaluate(P("x^-1"), {{"x", 0}}), DivisionByZero);
    CHECK_THROWS_AS(evaluate(P("x*y"), {{"x", 1}}), MissingAssignment);
}

TEST_CASE("coefficient slices") {
    auto s = coeff_slices(P("x*y^2*z + x^2*y*z"), "z");
    REQUIRE(s.size() == 1);
    CHECK(s.begin()->first == 1);
    CHECK(s.begin()->second == P("x*y^2 + x^2*y"));

    auto c = coeff_slices(P("7"), "z");
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == 0);
    CHECK(c.begin()->second == Polynomial(7));

    Polynomial s2 = P("x^2*y^2*z") * P("3*x^2 + 10*x*y + 3*y^2") +
                    P("x*y*z^2") * P("x^3 + 11*x^2*y + 11*x*y^2 + y^3");
    auto sl = coeff_slices(s2, "z");
    REQUIRE(sl.size() == 2);
    CHECK(sl.at(1) == P("x^2*y^2") * P("3*x^2 + 10*x*y + 3*y^2"));
    CHECK(sl.at(2) == P("x*y") * P("x^3 + 11*x^2*y + 11*x*y^2 + y^3"));
}

TEST_CASE("json form") {
    Polynomial p = P("-12*x^2*z^-1 + 5");
    auto j = to_json(p);
    CHECK(j.size() == 2);
    CHECK(j[0]["coeff"] == "5");
    CHECK(j[1]["coeff"] == "-12");
    CHECK(j[1]["exps"]["z"] == -1);
    CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("exponent divisor read-off") {
    CHECK(divide_exponents(P("x^2*y^4*e + z^4"), {{"x", 2}, {"y", 2}, {"z", 4}}) == P("x*y^2*e + z"));
    CHECK_THROWS_AS(divide_exponents(P("x^3"), {{"x", 2}}), InternalError);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(gg::testing::test_seed());
    std::vector<VarId> vars{"x", "y", "z"};
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial a = gg::testing::random_polynomial(rng, vars);
        Polynomial b = gg::testing::random_polynomial(rng, vars);
        Polynomial c = gg::testing::random_polynomial(rng, vars);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + Polynomial() == a);
        REQUIRE(a * Polynomial(1) == a);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("parse inverts format on random inputs") {
    std::mt19937 rng(gg::testing::test_seed() + 1);
    std::vector<VarId> vars{"x", "y", "z", "u1", "long_name"};
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial p = gg::testing::random_polynomial(rng, vars, 6);
        REQUIRE(Polynomial::parse(p.to_string()) == p);
        REQUIRE(polynomial_from_json(to_json(p)) == p);
    }
}

TEST_CASE("Leibniz rule for partial derivatives") {
    std::mt19937 rng(gg::testing::test_seed() + 2);
    std::vector<VarId> vars{"x", "y"};
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial p = gg::testing::random_polynomial(rng, vars);
        Polynomial q = gg::testing::random_polynomial(rng, vars);
        REQUIRE(partial(p * q, "x") == partial(p, "x") * q + p * partial(q, "x"));
    }
}

TEST_CASE("slices reassemble") {
    std::mt19937 rng(gg::testing::test_seed() + 3);
    std::vector<VarId> vars{"x", "y", "z"};
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial p = gg::testing::random_polynomial(rng, vars, 6);
        Polynomial back;
        for (const auto& [i, s] : coeff_slices(p, "z")) {
            REQUIRE(!s.variables().count("z"));
            back += s * Polynomial::var("z", i);
        }
        REQUIRE(back == p);
    }
}
