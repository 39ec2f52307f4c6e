#include <map>
#include <set>

#include "doctest.h"
#include "gammagrammar/actions.hpp"
#include "gammagrammar/error.hpp"
#include "test_support.hpp"

using namespace gg;
using gg::testing::P;

namespace {

GenWord Q(const char* s) { return parse_word(s, Family::stirling); }

std::vector<GenLetter> letters_of(const GenWord& w) {
    std::vector<GenLetter> out;
    for (const auto& l : w.letters)
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
}

Polynomial binom_weight(const char* a, const char* b, int i, const char* single, int j, int d) {
    // single^i (ab)^j (a+b)^d
    return pow(Polynomial::var(single), static_cast<unsigned>(i)) *
           pow(Polynomial::var(a) * Polynomial::var(b), static_cast<unsigned>(j)) *
           pow(Polynomial::var(a) + Polynomial::var(b), static_cast<unsigned>(d));
}

}  // namespace

TEST_CASE("Stirling action on the worked example") {
    GenWord s = Q("2447887332115665");
    GenWord phi1 = fs_stirling_at(s, 1);
    CHECK(to_string(phi1) == "4478873322115665");
    GenWord phi4 = fs_stirling_at(s, 4);
    CHECK(to_string(phi4) == "2448877332115665");
    CHECK(fs_stirling_at(phi1, 9) == s);
    CHECK(fs_stirling_at(phi4, 6) == s);
    // letter-indexed forms
    CHECK(fs_stirling(s, 2) == phi1);
    CHECK(fs_stirling(s, 7) == phi4);
    CHECK(fs_stirling(phi1, 2) == s);
    CHECK(fs_stirling(fs_stirling(s, 7), 7) == s);
    CHECK_THROWS_AS(fs_stirling_at(s, 17), PositionOutOfRange);
    CHECK_THROWS_AS(fs_stirling_at(s, 0), PositionOutOfRange);
    // the first 2 in 1122 is neither a double ascent nor a descent-plateau
    CHECK(fs_stirling(Q("1122"), 2) == Q("1122"));
}

TEST_CASE("insert and delete maps") {
    CHECK(to_string(insert_pair(Q("1221"), 3, 4)) == "122133");
    CHECK(to_string(insert_pair(Q("1221"), 3, 0)) == "331221");
    CHECK_THROWS_AS(insert_pair(Q("1221"), 3, 5), InvalidGap);
    CHECK_THROWS_AS(delete_pair(Q("1221"), 3), MissingLetter);
    GenWord j = parse_word("b1 1 1", Family::jacobi);
    CHECK(to_string(insert_barred(j, 2, 3)) == "b1 1 1 b2");
    CHECK(to_string(delete_barred(j, 1)) == "1 1");
    CHECK_THROWS_AS(delete_barred(j, 2), MissingLetter);
    CHECK_THROWS_AS(insert_barred(j, 2, 9), InvalidGap);

    std::mt19937 rng(gg::testing::test_seed() + 30);
    auto q4 = generate_words(Family::stirling, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        const GenWord& w = q4[rng() % q4.size()];
        std::size_t g = rng() % (w.size() + 1);
        REQUIRE(delete_pair(insert_pair(w, 5, g), 5) == w);
        REQUIRE(is_valid(insert_pair(w, 5, g)));
        REQUIRE(delete_barred(insert_barred(w, 7, g), 7) == w);
    }
    // all theta maps from Q_2 give Q_3
    std::set<std::string> q3;
    for (const auto& w : generate_words(Family::stirling, 2))
        for (std::size_t g = 0; g <= w.size(); ++g) q3.insert(to_string(insert_pair(w, 3, g)));
    CHECK(q3.size() == 15);
}

TEST_CASE("typeB action: involution and commutation") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& p : generate_signed(Family::typeB_derangements, n)) {
            CycleForm c = to_cycle_form(p);
            for (int a = 1; a <= static_cast<int>(n); ++a) {
                CycleForm once = fs_typeB(c, a);
                REQUIRE(is_valid_signed(Family::typeB_derangements, from_cycle_form(once)));
                REQUIRE(normalized(once) == once);
                REQUIRE(fs_typeB(once, a) == c);
                for (int b = a + 1; b <= static_cast<int>(n); ++b)
                    REQUIRE(fs_typeB(fs_typeB(c, a), b) == fs_typeB(fs_typeB(c, b), a));
            }
        }
    }
    // a letter that is neither a cycle double ascent nor descent
    CycleForm c = parse_cycles("(-3,1)(2,5)(-4)");
    CHECK(fs_typeB(c, 5) == c);
    CHECK(fs_typeB(c, 4) == c);
    CHECK(fs_typeB(parse_cycles("(2,3,5)(1)(4)"), 3) == parse_cycles("(3,2,5)(1)(4)"));
}

TEST_CASE("Stirling and Jacobi actions: involution and commutation") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& w : generate_words(Family::stirling, n))
            for (int a = 1; a <= static_cast<int>(n); ++a) {
                GenWord once = fs_stirling(w, a);
                REQUIRE(is_valid(once));
                REQUIRE(fs_stirling(once, a) == w);
                for (int b = a + 1; b <= static_cast<int>(n); ++b)
                    REQUIRE(fs_stirling(fs_stirling(w, a), b) == fs_stirling(fs_stirling(w, b), a));
            }
    for (Family f : {Family::jacobi, Family::jacobi_deleted})
        for (unsigned n = 1; n <= 3; ++n)
            for (const auto& w : generate_words(f, n)) {
                auto ls = letters_of(w);
                for (std::size_t a = 0; a < ls.size(); ++a) {
                    GenWord once = fs_jacobi(w, ls[a]);
                    REQUIRE(is_valid(once));
                    REQUIRE(fs_jacobi(once, ls[a]) == w);
                    for (std::size_t b = a + 1; b < ls.size(); ++b)
                        REQUIRE(fs_jacobi(fs_jacobi(w, ls[a]), ls[b]) == fs_jacobi(fs_jacobi(w, ls[b]), ls[a]));
                }
            }
}

TEST_CASE("Jacobi action undoes a descent-plateau in JSPD_3") {
    // words with exactly one descent-plateau: moving it gives a double ascent that moves back
    int checked = 0;
    for (const auto& w : generate_words(Family::jacobi_deleted, 3)) {
        auto r = ranks(w);
        r.insert(r.begin(), 0);
        r.push_back(0);
        std::vector<std::size_t> dp;
        for (std::size_t k = 1; k <= w.size(); ++k)
            if (r[k - 1] > r[k] && r[k] == r[k + 1]) dp.push_back(k);
        if (dp.size() != 1) continue;
        GenWord moved = fs_jacobi_at(w, dp[0]);
        GenLetter l = w[dp[0] - 1];
        std::size_t p = 0;
        for (std::size_t i = 0; i < moved.size() && !p; ++i)
            if (moved[i] == l) p = i + 1;
        auto mr = ranks(moved);
        mr.insert(mr.begin(), 0);
        mr.push_back(0);
        REQUIRE(mr[p - 1] < mr[p]);
        REQUIRE(mr[p] < mr[p + 1]);
        REQUIRE(fs_jacobi_at(moved, p) == w);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("plain valley hopping") {
    for (unsigned n = 1; n <= 6; ++n) {
        Polynomial total;
        for (const auto& o : orbit_decompose(Family::perm, n)) {
            int i = o.rep_stats.at("des");
            CHECK(o.rep_stats.at("peak") == i + 1);
            REQUIRE(o.weight == pow(P("x"), i) * pow(P("1 + x"), static_cast<unsigned>(static_cast<int>(n) - 1 - 2 * i)));
            total += o.weight;
        }
        CHECK(total == distribution(Family::perm, n, {{"des", "x"}}).polynomial);
    }
    CHECK(fs_plain(parse_word("132", Family::perm), 1) == parse_word("321", Family::perm));
}

TEST_CASE("orbit decomposition") {
    auto d2 = orbit_decompose(Family::typeB_derangements, 2);
    Polynomial sum;
    std::size_t size = 0;
    for (const auto& o : d2) {
        sum += o.weight;
        size += o.orbit_size;
        CHECK(o.rep_stats.at("cda") == 0);
    }
    CHECK(size == 5);
    CHECK(sum == distribution(Family::typeB_derangements, 2, {{"wexc", "x"}, {"aexc", "y"}, {"single", "z"}}).polynomial);

    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& o : orbit_decompose(Family::typeB_derangements, n)) {
            int i = o.rep_stats.at("single"), j = o.rep_stats.at("wexc");
            REQUIRE(o.weight == binom_weight("x", "y", i, "z", j, static_cast<int>(n) - i - 2 * j));
        }
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& o : orbit_decompose(Family::stirling, n)) {
            int i = o.rep_stats.at("des"), j = o.rep_stats.at("laplat");
            REQUIRE(o.weight == binom_weight("x", "z", i, "y", j, 2 * static_cast<int>(n) + 1 - i - 2 * j));
        }

    auto q3 = orbit_decompose(Family::stirling, 3);
    std::map<std::pair<int, int>, int> counts;
    for (const auto& o : q3) ++counts[{o.rep_stats.at("des"), o.rep_stats.at("laplat")}];
    // gamma_3(x,y) = x^3y + 4x^2y^2 + xy^3 + 2x^3y^2
    CHECK(counts == std::map<std::pair<int, int>, int>{{{3, 1}, 1}, {{2, 2}, 4}, {{1, 3}, 1}, {{3, 2}, 2}});

    auto j = to_json(q3.front());
    CHECK(j.contains("rep"));
    CHECK(j["orbit_size"].get<std::size_t>() == q3.front().orbit_size);
    CHECK_THROWS_AS(orbit_decompose(Family::legendre, 2), UnsupportedFamily);
}
