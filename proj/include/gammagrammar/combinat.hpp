#pragma once

// Combinatorial families and their statistics. Word families (permutations, Stirling,
// Legendre-Stirling and Jacobi-Stirling permutations) share GenWord; signed permutations
// use the window notation.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammagrammar/polynomial.hpp"

namespace gg {

enum class Family {
    perm,
    signed_perm,
    typeB_derangements,
    stirling,
    legendre,
    legendre_deleted,
    jacobi,
    jacobi_deleted,
    jacobi_partial,
    involutions,
};

std::string_view to_string(Family f);
/// Throws UnsupportedFamily.
Family family_from_string(std::string_view name);
const std::vector<Family>& all_families();

bool is_signed_family(Family f);
bool is_legendre_family(Family f);
bool is_jacobi_family(Family f);

struct GenLetter {
    int value = 0;
    bool barred = false;
    friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

struct GenWord {
    Family family = Family::perm;
    std::vector<GenLetter> letters;

    std::size_t size() const noexcept { return letters.size(); }
    const GenLetter& operator[](std::size_t i) const { return letters[i]; }
    friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// Position of a letter in the family's total preorder; the boundary sentinel has rank 0.
///   plain / Stirling:  k -> 2k
///   Legendre:          bar(k) = k -> 2k
///   Jacobi:            bar(k) -> 2k-1 < k -> 2k
int letter_rank(Family f, GenLetter l);
std::vector<int> ranks(const GenWord& w);

/// "b2 b1 1 1"; plain words print their letters separated by spaces as well.
std::string to_string(const GenWord& w);
/// Accepts space separated letters, or a digit string such as "1221" for plain letters < 10.
GenWord parse_word(std::string_view text, Family f);
nlohmann::json to_json(const GenWord& w);

struct SignedPerm {
    std::vector<int> window;  // pi(1..n)

    int size() const noexcept { return static_cast<int>(window.size()); }
    /// pi(i) for i in -n..n, with pi(0) = 0 and pi(-i) = -pi(i).
    int operator()(int i) const;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

struct CycleForm {
    std::vector<std::vector<int>> cycles;
    friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

CycleForm to_cycle_form(const SignedPerm& p);
SignedPerm from_cycle_form(const CycleForm& c);
/// Puts each cycle in standard form and sorts the cycles.
CycleForm normalized(CycleForm c);

/// Window "-3 5 1 -7 2 -6 -4".
std::string to_string(const SignedPerm& p);
SignedPerm parse_signed(std::string_view text);
/// "(-6)(-7,-4)(-3,1)(2,5)"
std::string to_string(const CycleForm& c);
CycleForm parse_cycles(std::string_view text);

// Generation -----------------------------------------------------------------

struct GenOptions {
    std::optional<unsigned> budget;  // overrides default_budget(family)
    unsigned workers = 1;
    std::vector<int> removed_bars;   // jacobi-partial: the k with bar(k) removed
};

unsigned default_budget(Family f);
/// Throws BudgetExceeded when n is above the effective budget.
void check_budget(Family f, unsigned n, const GenOptions& opts);

/// Number of objects, computed from the closed forms.
Integer family_size(Family f, unsigned n, const GenOptions& opts = {});

bool is_valid(const GenWord& w);
bool is_valid_signed(Family f, const SignedPerm& p);

/// Word families in canonical insertion order.
std::vector<GenWord> generate_words(Family f, unsigned n, const GenOptions& opts = {});
/// Signed families in canonical order (permutation order, then sign mask).
std::vector<SignedPerm> generate_signed(Family f, unsigned n, const GenOptions& opts = {});

void for_each_word(Family f, unsigned n, const std::function<void(const GenWord&)>& fn,
                   const GenOptions& opts = {});
void for_each_signed(Family f, unsigned n, const std::function<void(const SignedPerm&)>& fn,
                     const GenOptions& opts = {});

/// All involutions of [n] as plain words.
std::vector<GenWord> gen_involutions(unsigned n);
/// I_n(x) = sum over involutions of x^des.
Polynomial involution_descent_poly(unsigned n, const VarId& x = "x");

// Statistics ------------------------------------------------------------------

using StatValues = std::map<std::string, int>;

/// Names that `statistics` accepts for objects of family f.
std::vector<std::string> statistic_names(Family f);

/// Throws UndefinedStatistic for names not defined on the family.
StatValues statistics(const GenWord& w, const std::vector<std::string>& names);
StatValues statistics(const SignedPerm& p, const std::vector<std::string>& names);
StatValues statistics(const CycleForm& c, const std::vector<std::string>& names);

int statistic(const GenWord& w, std::string_view name);
int statistic(const SignedPerm& p, std::string_view name);

using StatBinding = std::pair<std::string, VarId>;

struct StatDistribution {
    Polynomial polynomial;
    Family family = Family::perm;
    unsigned n = 0;
    std::vector<StatBinding> stats;
};

/// Exact generating polynomial of the bound statistics over the family.
StatDistribution distribution(Family f, unsigned n, const std::vector<StatBinding>& stats,
                              const GenOptions& opts = {});

/// Parses "asc:x,des:y" (a missing ":var" binds the statistic to x).
std::vector<StatBinding> parse_stat_bindings(std::string_view text);

nlohmann::json to_json(const StatDistribution& d);

}  // namespace gg
