#include <random>

#include "doctest.h"
#include "gammagrammar/error.hpp"
#include "gammagrammar/gammalib.hpp"
#include "gammagrammar/recurtab.hpp"
#include "test_support.hpp"

using namespace gg;
using gg::testing::P;

namespace {

Polynomial dist(Family f, unsigned n, const char* bindings) {
    return distribution(f, n, parse_stat_bindings(bindings)).polynomial;
}

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

// Coefficients of the slices read as a table, with j shifted down by `shift`.
CoefficientTable as_table(const PartialGammaExpansion& e, int shift = 0) {
    CoefficientTable t;
    t.name = "slices";
    for (const auto& [i, g] : e.slices)
        for (std::size_t j = 0; j < g.gammas.size(); ++j)
            if (g.gammas[j] != 0) t.entries[{i, static_cast<int>(j) - shift}] = g.gammas[j];
    return t;
}

}  // namespace

TEST_CASE("univariate expansion") {
    Polynomial b2 = dist(Family::signed_perm, 2, "desB:x");
    CHECK(b2 == P("1 + 6*x + x^2"));
    CHECK(gamma_expand(b2, 2).gammas == ints({1, 4}));
    for (int d = 0; d <= 6; ++d) {
        auto g = gamma_expand(pow(P("1 + x"), static_cast<unsigned>(d)), d);
        CHECK(g.gammas.size() == static_cast<std::size_t>(d / 2 + 1));
        CHECK(g.gammas[0] == 1);
        for (std::size_t k = 1; k < g.gammas.size(); ++k) CHECK(g.gammas[k] == 0);
    }
    Polynomial a4 = P("x + 11*x^2 + 11*x^3 + x^4");
    CHECK(gamma_expand(a4, 5).gammas == ints({0, 1, 8}));
    CHECK(gamma_expand(P("1"), 0).gammas == ints({1}));
    CHECK(gamma_expand(P("t + 3*t^2 + t^3"), 4, "t").gammas == ints({0, 1, 1}));

    CHECK_THROWS_AS(gamma_expand(P("x + 2*x^2"), 3), NotSymmetric);
    CHECK_THROWS_AS(gamma_expand(P("1 + x^3"), 2), NotSymmetric);
    CHECK_THROWS_AS(gamma_expand(P("1 + x^-1"), 2), NotSymmetric);
    CHECK_THROWS_AS(gamma_expand(P("1 + y"), 1), UnknownVariable);
    try {
        gamma_expand(P("x + 2*x^2"), 3);
    } catch (const NotSymmetric& e) {
        CHECK(std::string(e.what()).find("x^1") != std::string::npos);
    }
}

TEST_CASE("bivariate expansion") {
    CHECK(gamma_expand_xy(P("x^2 + y^2"), 2).gammas == ints({1, -2}));
    CHECK(gamma_expand_xy(P("x*y") * P("x + y"), 3).gammas == ints({0, 1}));
    CHECK(gamma_expand_xy(P("3*x^2 + 10*x*y + 3*y^2"), 2).gammas == ints({3, 4}));
    CHECK(gamma_expand_xy(P("u*v"), 2, "u", "v").gammas == ints({0, 1}));
    CHECK_THROWS_AS(gamma_expand_xy(P("x^2 + y"), 2), NotHomogeneous);
    CHECK_THROWS_AS(gamma_expand_xy(P("x^2 + y^2"), 3), NotHomogeneous);
    CHECK_THROWS_AS(gamma_expand_xy(P("x^2 + 2*y^2"), 2), NotSymmetric);
}

TEST_CASE("partial expansion") {
    auto s1 = partial_gamma(dist(Family::jacobi, 1, "asc:x,des:y,plat:z"));
    REQUIRE(s1.slices.size() == 1);
    CHECK(s1.slices.at(1).gammas == ints({0, 1}));
    CHECK(s1.positive);
    CHECK(!s1.witness);

    auto neg = partial_gamma(P("z*x^2 - z*x*y + z*y^2 + x + y"));
    CHECK(!neg.positive);
    REQUIRE(neg.witness);
    CHECK(neg.witness->slice == 1);
    CHECK(neg.witness->j == 1);
    CHECK(neg.witness->gamma == -3);
    CHECK(reconstruct(neg) == P("z*x^2 - z*x*y + z*y^2 + x + y"));

    // E_3 slices follow g_3(x,y) = x^3 + 12xy + 8y
    auto e3 = partial_gamma(dist(Family::typeB_derangements, 3, "wexc:x,aexc:y,single:z"));
    CHECK(e3.slices.at(3).gammas == ints({1}));
    CHECK(e3.slices.at(1).gammas == ints({0, 12}));
    CHECK(e3.slices.at(0).gammas == ints({0, 8}));
    CHECK(e3.positive);

    try {
        partial_gamma(P("z^2*x + x + y"));
        FAIL("expected NotSymmetric");
    } catch (const NotSymmetric& e) {
        CHECK(std::string(e.what()).find("slice z^2") != std::string::npos);
    }
    CHECK_THROWS_AS(partial_gamma(P("z*x^2 + z*y")), NotHomogeneous);

    auto j = to_json(s1);
    CHECK(j["positive"] == true);
    CHECK(j["slices"]["1"]["d"] == 3);
    CHECK(j["slices"]["1"]["gamma"] == nlohmann::json::array({0, 1}));
    CHECK(j["witness"].is_null());
    CHECK(to_json(neg)["witness"]["gamma"] == -3);
}

TEST_CASE("reconstruction and uniqueness, randomized") {
    std::mt19937 rng(gg::testing::test_seed() + 40);
    std::uniform_int_distribution<int> deg(0, 12), coef(-50, 50);
    for (int trial = 0; trial < 1000; ++trial) {
        GammaVector g{deg(rng), {}};
        for (int k = 0; 2 * k <= g.d; ++k) g.gammas.push_back(coef(rng));
        Polynomial f = gamma_reconstruct(g);
        REQUIRE(gamma_expand(f, g.d) == g);
        Polynomial fxy = gamma_reconstruct_xy(g);
        if (!fxy.is_zero()) REQUIRE(is_homogeneous(fxy));
        REQUIRE(gamma_expand_xy(fxy, g.d) == g);
        GammaVector h = g;
        h.gammas[rng() % h.gammas.size()] += 1 + static_cast<int>(rng() % 5);
        REQUIRE(gamma_reconstruct(h) != f);
    }
}

TEST_CASE("enumerated families expand into the recurrence tables") {
    for (unsigned n = 1; n <= 6; ++n) {
        CAPTURE(n);
        auto e = partial_gamma(dist(Family::typeB_derangements, n, "wexc:x,aexc:y,single:z"));
        CHECK(e.positive);
        CHECK(as_table(e).entries == table_g(n).entries);
    }
    for (unsigned n = 1; n <= 5; ++n) {
        CAPTURE(n);
        auto e = partial_gamma(dist(Family::stirling, n, "asc:x,des:y,plat:z"), "y", "x", "z");
        CHECK(e.positive);
        CHECK(as_table(e).entries == table_gamma_stirling(n).entries);
    }
    for (unsigned n = 1; n <= 3; ++n) {
        CAPTURE(n);
        auto [s, t] = tables_s_t(n);
        auto [h, l] = tables_h_l(n);
        auto es = partial_gamma(dist(Family::jacobi, n, "asc:x,des:y,plat:z"));
        auto et = partial_gamma(dist(Family::jacobi_deleted, n, "asc:x,des:y,plat:z"));
        auto el = partial_gamma(dist(Family::legendre, n, "asc:x,des:y,plat:z"));
        auto eh = partial_gamma(dist(Family::legendre_deleted, n, "asc:x,des:y,plat:z"));
        CHECK(es.positive);
        CHECK(et.positive);
        CHECK(el.positive);
        CHECK(eh.positive);
        CHECK(as_table(es).entries == s.entries);
        CHECK(as_table(et).entries == t.entries);
        CHECK(as_table(el).entries == l.entries);
        CHECK(as_table(eh, 1).entries == h.entries);
    }
}

TEST_CASE("gamma vector of A_n is row n of a(n,k)") {
    for (unsigned n = 1; n <= 7; ++n) {
        Polynomial an = P("x") * dist(Family::perm, n, "des:x");
        auto g = gamma_expand(an, static_cast<int>(n) + 1);
        auto a = table_a(n);
        CHECK(g.gammas[0] == 0);
        for (std::size_t k = 1; k < g.gammas.size(); ++k) CHECK(g.gammas[k] == a.at(static_cast<int>(k)));
    }
}

TEST_CASE("conjecture report for partial Jacobi-Stirling families") {
    CHECK_THROWS(conjecture_check_jsp(1, 1));
    CHECK_THROWS(conjecture_check_jsp(3, 0));
    CHECK_THROWS(conjecture_check_jsp(3, 3));
    auto r = conjecture_check_jsp(2, 1);
    CHECK(r.expansion.positive);
    Polynomial both = distribution(Family::jacobi_partial, 2, parse_stat_bindings("asc:x,des:y,plat:z"),
                                   GenOptions{{}, 1, {1}})
                          .polynomial +
                      distribution(Family::jacobi_partial, 2, parse_stat_bindings("asc:x,des:y,plat:z"),
                                   GenOptions{{}, 1, {2}})
                          .polynomial;
    CHECK(r.distribution == both);
    CHECK(reconstruct(r.expansion) == both);
    for (unsigned i = 1; i <= 2; ++i) {
        auto r3 = conjecture_check_jsp(3, i);
        CHECK(reconstruct(r3.expansion) == r3.distribution);
        MESSAGE("JSP_{3," << i << "} positive=" << r3.expansion.positive);
    }
    CHECK(to_json(r)["k"] == 2);
}

TEST_CASE("involution descent polynomials") {
    auto r3 = guo_zeng_check(3);
    CHECK(r3.descent_poly == P("1 + 2*x + x^2"));
    CHECK(r3.gamma.gammas == ints({1, 0}));
    CHECK(r3.gamma.nonnegative());
    CHECK(guo_zeng_check(1).gamma.gammas == ints({1}));
    for (unsigned n = 1; n <= 8; ++n) {
        auto r = guo_zeng_check(n);
        CHECK(gamma_reconstruct(r.gamma) == r.descent_poly);
        MESSAGE("I_" << n << " gamma nonnegative=" << r.gamma.nonnegative());
    }
    CHECK(to_json(r3)["gamma"]["gamma"] == nlohmann::json::array({1, 0}));
    CHECK_THROWS_AS(guo_zeng_check(9), BudgetExceeded);
}
