#include <array>

#include "doctest.h"
#include "gammagrammar/error.hpp"
#include "gammagrammar/grammar.hpp"
#include "test_support.hpp"

using namespace gg;
using gg::testing::P;

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("derive: single steps") {
    Grammar g = Grammar::parse("x -> x*y\ny -> y\n");
    CHECK(derive_n(g, P("x"), 2) == P("x*y^2 + x*y"));
    CHECK(derive(g, Polynomial(1)).is_zero());
    CHECK(derive(g, Polynomial()).is_zero());
    CHECK(derive_n(preset("stirling"), P("x"), 2) == P("x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z"));
    CHECK(derive_n(g, P("x + 3"), 0) == P("x + 3"));
    // negative powers use the same product rule
    Grammar h = Grammar::parse("x -> 1");
    CHECK(derive(h, P("x^-2")) == P("-2*x^-3"));
}

TEST_CASE("derive_n on the Eulerian grammar gives A_n") {
    Polynomial a3 = substitute(derive_n(preset("eulerian"), P("x"), 3), "y", Polynomial(1));
    CHECK(a3 == P("x + 4*x^2 + x^3"));
}

TEST_CASE("derive_n on the type-B derangement grammar") {
    Polynomial d2 = derive_n(preset("dB"), P("e"), 2);
    Polynomial e2 = divide_exponents(shift(d2, Monomial::var("e", -1)), {{"x", 2}, {"y", 2}, {"z", 4}});
    CHECK(substitute(e2, {{"y", Polynomial(1)}, {"z", Polynomial(1)}}) == P("1 + 4*x"));
}

TEST_CASE("derive_alternating") {
    std::array jacobi{preset("jacobi-1"), preset("jacobi-2")};
    CHECK(derive_alternating(jacobi, P("x"), 1) == P("x*y^2*z + x^2*y*z"));
    CHECK(derive_alternating(jacobi, P("x"), 0) == P("x"));
    std::array legendre{preset("legendre-1"), preset("legendre-2")};
    CHECK(derive_alternating(legendre, P("x"), 1) == P("2*x*y*z^2"));
    CHECK(derive_sequence(legendre, P("x"), 1) == P("u*v"));
    // the three starting letters of the Jacobi grammars agree
    CHECK(derive_alternating(jacobi, P("y"), 2) == derive_alternating(jacobi, P("z"), 2));
}

TEST_CASE("verify_grammar_transform examples") {
    auto ok = verify_grammar_transform(preset("eulerian"), {{"u", P("x*y")}, {"v", P("x + y")}},
                                       Grammar::parse("u -> u*v\nv -> 2*u"));
    CHECK(ok.ok);

    Grammar eul = preset("eulerian");
    CHECK(verify_grammar_transform(eul, {{"x", P("x")}, {"y", P("y")}}, eul).ok);

    CHECK(verify_grammar_transform(preset("typeB"), {{"u", P("x*y")}, {"v", P("x^2 + y^2")}},
                                   Grammar::parse("u -> u*v\nv -> 4*u^2"))
              .ok);

    auto bad = verify_grammar_transform(preset("typeB"), {{"u", P("x*y")}, {"v", P("x^2 + y^2")}},
                                        Grammar::parse("u -> u*v\nv -> 2*u^2"));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.variable.has_value());
    CHECK(*bad.variable == VarId("v"));
    CHECK(bad.old_side == P("4*x^2*y^2"));
    CHECK(bad.new_side == P("2*x^2*y^2"));

    CHECK_THROWS_AS(verify_grammar_transform(eul, {{"u", P("q*x")}}, eul), UnknownVariable);
}

TEST_CASE("every catalogued transform verifies and commutes") {
    for (const auto& t : transform_catalog()) {
        CAPTURE(t.id);
        REQUIRE(t.old_grammars.size() == t.new_grammars.size());
        std::vector<Grammar> olds, news;
        for (std::size_t i = 0; i < t.old_grammars.size(); ++i) {
            olds.push_back(preset(t.old_grammars[i]));
            news.push_back(preset(t.new_grammars[i]));
            auto r = verify_grammar_transform(olds.back(), t.defs, news.back());
            CHECK_MESSAGE(r.ok, (r.variable ? r.variable->name() : std::string("?")));
        }
        auto c = verify_transform_commutes(olds, t.defs, news, 8);
        CHECK(c.ok);
    }
}

TEST_CASE("derivation property for shipped grammars") {
    std::mt19937 rng(gg::testing::test_seed() + 10);
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const Grammar& g = preset(name);
        auto var_set = g.variables();
        std::vector<VarId> vars(var_set.begin(), var_set.end());
        for (int trial = 0; trial < 60; ++trial) {
            Polynomial p = gg::testing::random_polynomial(rng, vars, 3, -2, 2);
            Polynomial q = gg::testing::random_polynomial(rng, vars, 3, -2, 2);
            REQUIRE(derive(g, p * q) == derive(g, p) * q + p * derive(g, q));
        }
    }
}

TEST_CASE("iterated Leibniz formula") {
    std::mt19937 rng(gg::testing::test_seed() + 11);
    for (const char* name : {"eulerian", "dB-uv", "stirling-uv"}) {
        CAPTURE(name);
        const Grammar& g = preset(name);
        auto var_set = g.variables();
        std::vector<VarId> vars(var_set.begin(), var_set.end());
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial p = gg::testing::random_polynomial(rng, vars, 2, 0, 2);
            Polynomial q = gg::testing::random_polynomial(rng, vars, 2, 0, 2);
            for (unsigned n = 0; n <= 6; ++n) {
                Polynomial rhs;
                for (unsigned k = 0; k <= n; ++k)
                    rhs += Polynomial(binomial(n, k)) * derive_n(g, p, k) * derive_n(g, q, n - k);
                REQUIRE(derive_n(g, p * q, n) == rhs);
            }
        }
    }
}

TEST_CASE("grammar file format") {
    Grammar g = Grammar::parse("# Eulerian\nx -> x*y   # rule one\n\n  y->x*y\n", "mine");
    CHECK(g.name() == "mine");
    CHECK(g.rule("x") == P("x*y"));
    CHECK(g.rule("y") == P("x*y"));
    CHECK(g.rule("e").is_zero());
    CHECK(Grammar::parse(g.to_string()).rules() == g.rules());
    CHECK_THROWS_AS(Grammar::parse("x => y"), ParseError);
    CHECK_THROWS_AS(Grammar::parse("x -> y\nx -> y"), ParseError);
    CHECK_THROWS_AS(Grammar::parse("x -> y +"), ParseError);
    CHECK_THROWS_AS(preset("nope"), UnknownGrammar);
    CHECK(preset_names().size() == 18);
}
