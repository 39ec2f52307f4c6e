#include "gammagrammar/combinat.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "gammagrammar/error.hpp"

namespace gg {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::perm, "perm"},
    {Family::signed_perm, "signed"},
    {Family::typeB_derangements, "typeB-derangements"},
    {Family::stirling, "stirling"},
    {Family::legendre, "legendre"},
    {Family::legendre_deleted, "legendre-deleted"},
    {Family::jacobi, "jacobi"},
    {Family::jacobi_deleted, "jacobi-deleted"},
    {Family::jacobi_partial, "jacobi-partial"},
    {Family::involutions, "involutions"},
}};

bool is_plain_family(Family f) {
    return f == Family::perm || f == Family::stirling || f == Family::involutions;
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    throw InternalError("unnamed family");
}

Family family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames)
        if (n == name) return fam;
    throw UnsupportedFamily("unsupported family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = [] {
        std::vector<Family> r;
        for (const auto& [f, n] : kFamilyNames) r.push_back(f);
        return r;
    }();
    return v;
}

bool is_signed_family(Family f) { return f == Family::signed_perm || f == Family::typeB_derangements; }
bool is_legendre_family(Family f) { return f == Family::legendre || f == Family::legendre_deleted; }
bool is_jacobi_family(Family f) {
    return f == Family::jacobi || f == Family::jacobi_deleted || f == Family::jacobi_partial;
}

int letter_rank(Family f, GenLetter l) {
    if (is_jacobi_family(f)) return 2 * l.value - (l.barred ? 1 : 0);
    return 2 * l.value;
}

std::vector<int> ranks(const GenWord& w) {
    std::vector<int> r;
    r.reserve(w.size());
    for (const auto& l : w.letters) r.push_back(letter_rank(w.family, l));
    return r;
}

std::string to_string(const GenWord& w) {
    std::string out;
    bool compact = is_plain_family(w.family) &&
                   std::all_of(w.letters.begin(), w.letters.end(), [](GenLetter l) { return l.value < 10; });
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        if (w[i].barred) out += 'b';
        out += std::to_string(w[i].value);
    }
    return out;
}

GenWord parse_word(std::string_view text, Family f) {
    if (is_signed_family(f)) throw UnsupportedFamily("signed families use the window notation");
    GenWord w{f, {}};
    bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        std::size_t start = i;
        GenLetter l;
        if (text[i] == 'b') {
            l.barred = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected a letter value", i);
        if (spaced) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                l.value = l.value * 10 + (text[i++] - '0');
        } else {
            l.value = text[i++] - '0';
        }
        if (l.value <= 0) throw ParseError("letters are positive", start);
        if (l.barred && is_plain_family(f)) throw ParseError("barred letter in a plain word", start);
        w.letters.push_back(l);
        skip();
    }
    return w;
}

nlohmann::json to_json(const GenWord& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& l : w.letters) a.push_back({{"v", l.value}, {"b", l.barred}});
    return a;
}

// Signed permutations ----------------------------------------------------------

int SignedPerm::operator()(int i) const {
    if (i == 0) return 0;
    return i > 0 ? window[i - 1] : -window[-i - 1];
}

CycleForm normalized(CycleForm c) {
    for (auto& cyc : c.cycles) {
        auto top = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), top + 1, cyc.end());
    }
    std::sort(c.cycles.begin(), c.cycles.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return c;
}

CycleForm to_cycle_form(const SignedPerm& p) {
    int n = p.size();
    std::vector<bool> seen(n + 1, false);
    CycleForm c;
    for (int j0 = 1; j0 <= n; ++j0) {
        if (seen[j0]) continue;
        std::vector<int> cyc;
        int e = p(j0);
        while (true) {
            cyc.push_back(e);
            seen[std::abs(e)] = true;
            if (std::abs(e) == j0) break;
            e = p(std::abs(e));
        }
        c.cycles.push_back(std::move(cyc));
    }
    return normalized(std::move(c));
}

SignedPerm from_cycle_form(const CycleForm& c) {
    std::size_t n = 0;
    for (const auto& cyc : c.cycles) n += cyc.size();
    SignedPerm p{std::vector<int>(n, 0)};
    for (const auto& cyc : c.cycles)
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            int from = std::abs(cyc[t]);
            if (from < 1 || static_cast<std::size_t>(from) > n || p.window[from - 1] != 0)
                throw Error("cycles do not partition [n]");
            p.window[from - 1] = cyc[(t + 1) % cyc.size()];
        }
    return p;
}

std::string to_string(const SignedPerm& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.window[i]);
    }
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep, std::size_t base) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == sep)) ++i;
    };
    skip();
    while (i < text.size()) {
        std::size_t start = i;
        bool neg = false;
        if (text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an integer", base + start);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        if (v == 0) throw ParseError("entries are nonzero", base + start);
        out.push_back(neg ? -v : v);
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != sep)
            throw ParseError("unexpected character", base + i);
        skip();
    }
    return out;
}

bool is_signed_permutation(const std::vector<int>& window) {
    std::vector<bool> seen(window.size() + 1, false);
    for (int v : window) {
        std::size_t a = static_cast<std::size_t>(std::abs(v));
        if (a == 0 || a > window.size() || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

}  // namespace

SignedPerm parse_signed(std::string_view text) {
    SignedPerm p{parse_int_list(text, ',', 0)};
    if (!is_signed_permutation(p.window)) throw ParseError("not a signed permutation", 0);
    return p;
}

std::string to_string(const CycleForm& c) {
    std::string out;
    for (const auto& cyc : c.cycles) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    return out;
}

CycleForm parse_cycles(std::string_view text) {
    CycleForm c;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ParseError("expected '('", i);
        std::size_t close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unclosed cycle", i);
        auto cyc = parse_int_list(text.substr(i + 1, close - i - 1), ',', i + 1);
        if (cyc.empty()) throw ParseError("empty cycle", i);
        c.cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    if (!is_signed_permutation(from_cycle_form(c).window)) throw ParseError("cycles do not partition [n]", 0);
    return normalized(std::move(c));
}

// Budgets and sizes -------------------------------------------------------------

unsigned default_budget(Family f) {
    switch (f) {
        case Family::perm:
        case Family::signed_perm:
        case Family::typeB_derangements:
        case Family::involutions:
            return 8;
        case Family::stirling:
            return 6;
        default:
            return 4;
    }
}

void check_budget(Family f, unsigned n, const GenOptions& opts) {
    unsigned b = opts.budget.value_or(default_budget(f));
    if (n > b) throw BudgetExceeded(std::string(to_string(f)), static_cast<int>(n), static_cast<int>(b));
}

namespace {

void check_removed(Family f, unsigned n, const GenOptions& opts) {
    if (f != Family::jacobi_partial) {
        if (!opts.removed_bars.empty()) throw Error("removed bars only apply to jacobi-partial");
        return;
    }
    std::set<int> s(opts.removed_bars.begin(), opts.removed_bars.end());
    if (s.size() != opts.removed_bars.size()) throw Error("repeated removed bar");
    for (int k : s)
        if (k < 1 || k > static_cast<int>(n)) throw Error("removed bar outside 1..k");
}

bool bar_kept(Family f, unsigned /*n*/, int m, const GenOptions& opts) {
    if (f == Family::stirling || f == Family::perm || f == Family::involutions) return false;
    if (f == Family::jacobi_partial)
        return std::find(opts.removed_bars.begin(), opts.removed_bars.end(), m) == opts.removed_bars.end();
    return true;
}

bool pair_kept(Family f, unsigned n, int m) {
    if (f == Family::perm) return false;
    if ((f == Family::legendre_deleted || f == Family::jacobi_deleted) && m == static_cast<int>(n)) return false;
    return true;
}

}  // namespace

Integer family_size(Family f, unsigned n, const GenOptions& opts) {
    check_removed(f, n, opts);
    Integer r = 1;
    switch (f) {
        case Family::perm:
            for (unsigned k = 2; k <= n; ++k) r *= k;
            return r;
        case Family::signed_perm:
            for (unsigned k = 1; k <= n; ++k) r *= 2 * k;
            return r;
        case Family::typeB_derangements:
            // d_n = 2n d_{n-1} + (-1)^n
            for (unsigned k = 1; k <= n; ++k) r = r * (2 * k) + (k % 2 ? -1 : 1);
            return r;
        case Family::involutions: {
            Integer a = 1, b = 1;  // I_{k-2}, I_{k-1}
            for (unsigned k = 2; k <= n; ++k) {
                Integer c = b + (k - 1) * a;
                a = b;
                b = c;
            }
            return b;
        }
        default: {
            std::size_t len = 0;
            for (unsigned m = 1; m <= n; ++m) {
                if (bar_kept(f, n, static_cast<int>(m), opts)) {
                    r *= len + 1;
                    ++len;
                }
                if (pair_kept(f, n, static_cast<int>(m))) {
                    r *= len + 1;
                    len += 2;
                }
            }
            return r;
        }
    }
}

// Validity ---------------------------------------------------------------------

namespace {

std::vector<std::pair<GenLetter, int>> ground_multiset(Family f, unsigned n, const GenOptions& opts) {
    std::vector<std::pair<GenLetter, int>> g;
    for (unsigned m = 1; m <= n; ++m) {
        int v = static_cast<int>(m);
        if (f == Family::perm || f == Family::involutions) {
            g.push_back({{v, false}, 1});
            continue;
        }
        if (bar_kept(f, n, v, opts)) g.push_back({{v, true}, 1});
        if (pair_kept(f, n, v)) g.push_back({{v, false}, 2});
    }
    return g;
}

}  // namespace

bool is_valid(const GenWord& w) {
    Family f = w.family;
    if (is_signed_family(f)) return false;
    int n = 0;
    for (const auto& l : w.letters) {
        if (l.value <= 0) return false;
        if (l.barred && is_plain_family(f)) return false;
        n = std::max(n, l.value);
    }
    // Multiset check against the ground multiset for the inferred order.
    std::map<std::pair<int, bool>, int> have;
    for (const auto& l : w.letters) ++have[{l.value, l.barred}];
    GenOptions opts;
    if (f == Family::jacobi_partial) {
        for (int k = 1; k <= n; ++k)
            if (!have.count({k, true})) opts.removed_bars.push_back(k);
    }
    std::map<std::pair<int, bool>, int> want;
    for (const auto& [l, c] : ground_multiset(f, static_cast<unsigned>(n), opts)) want[{l.value, l.barred}] = c;
    if (have != want) return false;
    if (f == Family::involutions) {
        for (int i = 0; i < n; ++i)
            if (w[static_cast<std::size_t>(w[i].value - 1)].value != i + 1) return false;
        return true;
    }
    if (f == Family::perm) return true;
    // Every letter strictly between the two unbarred copies of k has value > k.
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].barred) continue;
        int k = w[i].value;
        if (first[k] < 0) {
            first[k] = static_cast<int>(i);
            continue;
        }
        for (std::size_t j = static_cast<std::size_t>(first[k]) + 1; j < i; ++j)
            if (w[j].value <= k) return false;
    }
    return true;
}

bool is_valid_signed(Family f, const SignedPerm& p) {
    if (!is_signed_family(f) || !is_signed_permutation(p.window)) return false;
    if (f == Family::typeB_derangements)
        for (int i = 1; i <= p.size(); ++i)
            if (p(i) == i) return false;
    return true;
}

// Generation -------------------------------------------------------------------

namespace {

using WordFn = std::function<void(const GenWord&)>;

// Extends a word on the letters 1..m-1 by the letters m in every canonical way.
void extend(Family f, unsigned n, int m, const GenWord& w, const GenOptions& opts, const WordFn& fn) {
    if (f == Family::perm) {
        for (std::size_t g = 0; g <= w.size(); ++g) {
            GenWord c = w;
            c.letters.insert(c.letters.begin() + static_cast<std::ptrdiff_t>(g), GenLetter{m, false});
            fn(c);
        }
        return;
    }
    auto with_pair = [&](const GenWord& base) {
        if (!pair_kept(f, n, m)) {
            fn(base);
            return;
        }
        for (std::size_t g = 0; g <= base.size(); ++g) {
            GenWord c = base;
            auto it = c.letters.begin() + static_cast<std::ptrdiff_t>(g);
            c.letters.insert(it, 2, GenLetter{m, false});
            fn(c);
        }
    };
    if (f != Family::stirling && bar_kept(f, n, m, opts)) {
        for (std::size_t g = 0; g <= w.size(); ++g) {
            GenWord c = w;
            c.letters.insert(c.letters.begin() + static_cast<std::ptrdiff_t>(g), GenLetter{m, true});
            with_pair(c);
        }
    } else {
        with_pair(w);
    }
}

void grow(Family f, unsigned n, int m, const GenWord& w, const GenOptions& opts, const WordFn& fn) {
    if (m > static_cast<int>(n)) {
        fn(w);
        return;
    }
    extend(f, n, m, w, opts, [&](const GenWord& c) { grow(f, n, m + 1, c, opts, fn); });
}

void involution_rec(std::vector<int>& pi, int n, const WordFn& fn) {
    int i = 0;
    while (i < n && pi[i] != 0) ++i;
    if (i == n) {
        GenWord w{Family::involutions, {}};
        for (int v : pi) w.letters.push_back({v, false});
        fn(w);
        return;
    }
    pi[i] = i + 1;
    involution_rec(pi, n, fn);
    for (int j = i + 1; j < n; ++j) {
        if (pi[j] != 0) continue;
        pi[i] = j + 1;
        pi[j] = i + 1;
        involution_rec(pi, n, fn);
        pi[j] = 0;
    }
    pi[i] = 0;
}

unsigned worker_count(const GenOptions& opts) { return std::max(1u, opts.workers); }

// Runs body(chunk_index, begin, end) over [0, count) split into contiguous chunks.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t per = (count + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t b = std::min(count, t * per), e = std::min(count, b + per);
        threads.emplace_back(body, t, b, e);
    }
    for (auto& th : threads) th.join();
}

std::vector<GenWord> parents(Family f, unsigned n, const GenOptions& opts) {
    std::vector<GenWord> ps;
    // Words on the letters below n; the level-n rules are applied by the caller.
    std::function<void(int, const GenWord&)> rec = [&](int m, const GenWord& w) {
        if (m == static_cast<int>(n)) {
            ps.push_back(w);
            return;
        }
        extend(f, n, m, w, opts, [&](const GenWord& c) { rec(m + 1, c); });
    };
    rec(1, GenWord{f, {}});
    return ps;
}

}  // namespace

void for_each_word(Family f, unsigned n, const WordFn& fn, const GenOptions& opts) {
    if (is_signed_family(f)) throw UnsupportedFamily("signed families are not words");
    if (n < 1) throw Error("n must be positive");
    check_budget(f, n, opts);
    check_removed(f, n, opts);
    if (f == Family::involutions) {
        std::vector<int> pi(n, 0);
        involution_rec(pi, static_cast<int>(n), fn);
        return;
    }
    grow(f, n, 1, GenWord{f, {}}, opts, fn);
}

std::vector<GenWord> generate_words(Family f, unsigned n, const GenOptions& opts) {
    std::vector<GenWord> out;
    if (worker_count(opts) <= 1 || f == Family::involutions) {
        for_each_word(f, n, [&](const GenWord& w) { out.push_back(w); }, opts);
        return out;
    }
    if (is_signed_family(f)) throw UnsupportedFamily("signed families are not words");
    check_budget(f, n, opts);
    check_removed(f, n, opts);
    auto ps = parents(f, n, opts);
    std::vector<std::vector<GenWord>> parts(worker_count(opts));
    parallel_chunks(ps.size(), worker_count(opts), [&](unsigned t, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            extend(f, n, static_cast<int>(n), ps[i], opts, [&](const GenWord& c) { parts[t].push_back(c); });
    });
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

void for_each_signed(Family f, unsigned n, const std::function<void(const SignedPerm&)>& fn,
                     const GenOptions& opts) {
    if (!is_signed_family(f)) throw UnsupportedFamily("not a signed family");
    if (n < 1) throw Error("n must be positive");
    check_budget(f, n, opts);
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    SignedPerm p{std::vector<int>(n)};
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (unsigned i = 0; i < n; ++i) p.window[i] = (mask >> i & 1u) ? -base[i] : base[i];
            if (f == Family::typeB_derangements) {
                bool fixed = false;
                for (unsigned i = 0; i < n && !fixed; ++i) fixed = p.window[i] == static_cast<int>(i) + 1;
                if (fixed) continue;
            }
            fn(p);
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

std::vector<SignedPerm> generate_signed(Family f, unsigned n, const GenOptions& opts) {
    std::vector<SignedPerm> out;
    for_each_signed(f, n, [&](const SignedPerm& p) { out.push_back(p); }, opts);
    return out;
}

std::vector<GenWord> gen_involutions(unsigned n) {
    GenOptions opts;
    opts.budget = n;
    return generate_words(Family::involutions, n, opts);
}

// Statistics -------------------------------------------------------------------

namespace {

enum class Stat {
    asc, des, plat, dasc, ddes, peak, laplat, expk, desp, ubdes, bddes,
    exc, fix, dc,
    desB, wexc, aexc, single, cda, cdd, neg,
};

constexpr std::array<std::pair<Stat, std::string_view>, 21> kStatNames{{
    {Stat::asc, "asc"},     {Stat::des, "des"},       {Stat::plat, "plat"},   {Stat::dasc, "dasc"},
    {Stat::ddes, "ddes"},   {Stat::peak, "peak"},     {Stat::laplat, "laplat"}, {Stat::expk, "expk"},
    {Stat::desp, "desp"},   {Stat::ubdes, "ubdes"},   {Stat::bddes, "bddes"}, {Stat::exc, "exc"},
    {Stat::fix, "fix"},     {Stat::dc, "dc"},         {Stat::desB, "desB"},   {Stat::wexc, "wexc"},
    {Stat::aexc, "aexc"},   {Stat::single, "single"}, {Stat::cda, "cda"},     {Stat::cdd, "cdd"},
    {Stat::neg, "neg"},
}};

std::vector<Stat> stats_for(Family f) {
    using S = Stat;
    if (is_signed_family(f)) return {S::desB, S::wexc, S::aexc, S::single, S::cda, S::cdd, S::neg};
    if (f == Family::perm || f == Family::involutions)
        return {S::asc, S::des, S::peak, S::ddes, S::dasc, S::exc, S::fix, S::dc};
    std::vector<Stat> v{S::asc, S::des, S::plat, S::dasc, S::ddes, S::peak, S::laplat, S::expk, S::desp};
    if (!is_plain_family(f)) {
        v.push_back(S::ubdes);
        v.push_back(S::bddes);
    }
    return v;
}

Stat stat_id(Family f, std::string_view name) {
    for (const auto& [s, n] : kStatNames) {
        if (n != name) continue;
        auto allowed = stats_for(f);
        if (std::find(allowed.begin(), allowed.end(), s) != allowed.end()) return s;
        break;
    }
    throw UndefinedStatistic("statistic '" + std::string(name) + "' is not defined on " +
                             std::string(to_string(f)));
}

// Word statistics with the boundary sentinels r[0] = r[L+1] = 0.
struct WordView {
    std::vector<int> r;  // size L+2
    std::vector<bool> bar;
    std::size_t L;

    explicit WordView(const GenWord& w) : r(w.size() + 2, 0), bar(w.size() + 2, false), L(w.size()) {
        for (std::size_t i = 0; i < L; ++i) {
            r[i + 1] = letter_rank(w.family, w[i]);
            bar[i + 1] = w[i].barred;
        }
    }
};

int perm_stat(Stat s, const GenWord& w) {
    int n = static_cast<int>(w.size());
    auto at = [&](int i) { return (i < 1 || i > n) ? 0 : w[static_cast<std::size_t>(i - 1)].value; };
    int c = 0;
    switch (s) {
        case Stat::des:
            for (int i = 1; i < n; ++i) c += at(i) > at(i + 1);
            return c;
        case Stat::asc:
            for (int i = 1; i < n; ++i) c += at(i) < at(i + 1);
            return c;
        case Stat::peak:
            for (int i = 1; i <= n; ++i) c += at(i - 1) < at(i) && at(i) > at(i + 1);
            return c;
        case Stat::ddes:
            for (int i = 1; i <= n; ++i) c += at(i - 1) > at(i) && at(i) > at(i + 1);
            return c;
        case Stat::dasc:
            for (int i = 1; i <= n; ++i) c += at(i - 1) < at(i) && at(i) < at(i + 1);
            return c;
        case Stat::exc:
            for (int i = 1; i <= n; ++i) c += at(i) > i;
            return c;
        case Stat::fix:
            for (int i = 1; i <= n; ++i) c += at(i) == i;
            return c;
        case Stat::dc:
            for (int i = 1; i <= n; ++i) c += at(i) < i;
            return c;
        default:
            throw InternalError("perm statistic");
    }
}

int word_stat(Stat s, const WordView& v) {
    const auto& r = v.r;
    std::size_t L = v.L;
    int c = 0;
    switch (s) {
        case Stat::asc:
            for (std::size_t i = 0; i <= L; ++i) c += r[i] < r[i + 1];
            return c;
        case Stat::des:
            for (std::size_t i = 0; i <= L; ++i) c += r[i] > r[i + 1];
            return c;
        case Stat::plat:
            for (std::size_t i = 0; i <= L; ++i) c += r[i] == r[i + 1];
            return c;
        case Stat::dasc:
            for (std::size_t i = 1; i <= L; ++i) c += r[i - 1] < r[i] && r[i] < r[i + 1];
            return c;
        case Stat::ddes:
            for (std::size_t i = 1; i <= L; ++i) c += r[i - 1] > r[i] && r[i] > r[i + 1];
            return c;
        case Stat::peak:
            for (std::size_t i = 1; i <= L; ++i) c += r[i - 1] < r[i] && r[i] > r[i + 1];
            return c;
        case Stat::laplat:
            for (std::size_t i = 1; i <= L; ++i) c += r[i - 1] < r[i] && r[i] == r[i + 1];
            return c;
        case Stat::expk:
            return word_stat(Stat::peak, v) + word_stat(Stat::laplat, v);
        case Stat::desp:
            for (std::size_t i = 1; i <= L; ++i) c += r[i - 1] > r[i] && r[i] == r[i + 1];
            return c;
        case Stat::ubdes:
            for (std::size_t i = 1; i <= L; ++i) c += !v.bar[i] && r[i] > r[i + 1];
            return c;
        case Stat::bddes:
            for (std::size_t i = 1; i <= L; ++i) c += v.bar[i] && r[i - 1] > r[i] && r[i] > r[i + 1];
            return c;
        default:
            throw InternalError("word statistic");
    }
}

int cycle_stat(Stat s, const CycleForm& cf) {
    int c = 0;
    for (const auto& cyc : cf.cycles) {
        std::size_t L = cyc.size();
        // Virtual c_0 = +infinity in front of every cycle; positions 1 <= k < L.
        for (std::size_t k = 1; k < L; ++k) {
            bool prev_greater = k == 1 || cyc[k - 2] > cyc[k - 1];
            bool prev_less = k != 1 && cyc[k - 2] < cyc[k - 1];
            int ck = cyc[k - 1], next = cyc[k];
            if (s == Stat::cda) c += prev_less && ck < next;
            if (s == Stat::cdd) c += prev_greater && ck > next;
        }
    }
    return c;
}

int signed_stat(Stat s, const SignedPerm& p, const CycleForm* cf) {
    int n = p.size();
    int c = 0;
    switch (s) {
        case Stat::desB:
            for (int i = 0; i < n; ++i) c += p(i) > p(i + 1);
            return c;
        case Stat::wexc:
            for (int i = 1; i <= n; ++i) c += p(i) == i || p(std::abs(p(i))) > p(i);
            return c;
        case Stat::aexc:
            for (int i = 1; i <= n; ++i) c += p(i) != i && p(std::abs(p(i))) < p(i);
            return c;
        case Stat::single:
            for (int i = 1; i <= n; ++i) c += p(i) == -i;
            return c;
        case Stat::neg:
            for (int i = 1; i <= n; ++i) c += p(i) < 0;
            return c;
        case Stat::cda:
        case Stat::cdd: {
            if (cf) return cycle_stat(s, *cf);
            return cycle_stat(s, to_cycle_form(p));
        }
        default:
            throw InternalError("signed statistic");
    }
}

int eval_word(Stat s, const GenWord& w, const WordView* v) {
    if (w.family == Family::perm || w.family == Family::involutions) return perm_stat(s, w);
    if (v) return word_stat(s, *v);
    return word_stat(s, WordView(w));
}

}  // namespace

std::vector<std::string> statistic_names(Family f) {
    std::vector<std::string> out;
    for (Stat s : stats_for(f))
        for (const auto& [id, name] : kStatNames)
            if (id == s) out.emplace_back(name);
    return out;
}

int statistic(const GenWord& w, std::string_view name) { return eval_word(stat_id(w.family, name), w, nullptr); }

int statistic(const SignedPerm& p, std::string_view name) {
    return signed_stat(stat_id(Family::signed_perm, name), p, nullptr);
}

StatValues statistics(const GenWord& w, const std::vector<std::string>& names) {
    StatValues out;
    WordView v(w);
    for (const auto& n : names) out[n] = eval_word(stat_id(w.family, n), w, &v);
    return out;
}

StatValues statistics(const SignedPerm& p, const std::vector<std::string>& names) {
    StatValues out;
    CycleForm cf = to_cycle_form(p);
    for (const auto& n : names) out[n] = signed_stat(stat_id(Family::signed_perm, n), p, &cf);
    return out;
}

StatValues statistics(const CycleForm& c, const std::vector<std::string>& names) {
    return statistics(from_cycle_form(c), names);
}

Polynomial involution_descent_poly(unsigned n, const VarId& x) {
    Polynomial p;
    GenOptions opts;
    opts.budget = n;
    for_each_word(
        Family::involutions, n, [&](const GenWord& w) { p.add_term(Monomial::var(x, perm_stat(Stat::des, w)), 1); },
        opts);
    return p;
}

// Distributions ----------------------------------------------------------------

namespace {

using Counts = std::map<std::vector<int>, long long>;

Polynomial counts_to_poly(const Counts& counts, const std::vector<StatBinding>& stats) {
    Polynomial p;
    for (const auto& [vals, c] : counts) {
        std::vector<Monomial::Entry> e;
        for (std::size_t i = 0; i < vals.size(); ++i) e.emplace_back(stats[i].second, vals[i]);
        p.add_term(Monomial::from_pairs(std::move(e)), Integer(c));
    }
    return p;
}

void merge(Counts& into, const Counts& from) {
    for (const auto& [k, v] : from) into[k] += v;
}

}  // namespace

StatDistribution distribution(Family f, unsigned n, const std::vector<StatBinding>& stats,
                              const GenOptions& opts) {
    std::vector<Stat> ids;
    for (const auto& [name, var] : stats) ids.push_back(stat_id(f, name));
    check_budget(f, n, opts);
    check_removed(f, n, opts);
    unsigned workers = worker_count(opts);
    std::vector<Counts> parts(workers);
    std::vector<int> vals(ids.size());

    if (is_signed_family(f)) {
        bool need_cycles = std::any_of(ids.begin(), ids.end(), [](Stat s) { return s == Stat::cda || s == Stat::cdd; });
        auto tally = [&](Counts& into, const SignedPerm& p, std::vector<int>& buf) {
            CycleForm cf;
            if (need_cycles) cf = to_cycle_form(p);
            for (std::size_t i = 0; i < ids.size(); ++i) buf[i] = signed_stat(ids[i], p, need_cycles ? &cf : nullptr);
            ++into[buf];
        };
        if (workers <= 1) {
            for_each_signed(f, n, [&](const SignedPerm& p) { tally(parts[0], p, vals); }, opts);
        } else {
            auto all = generate_signed(f, n, opts);
            parallel_chunks(all.size(), workers, [&](unsigned t, std::size_t b, std::size_t e) {
                std::vector<int> buf(ids.size());
                for (std::size_t i = b; i < e; ++i) tally(parts[t], all[i], buf);
            });
        }
    } else {
        auto tally = [&](Counts& into, const GenWord& w, std::vector<int>& buf) {
            WordView v(w);
            for (std::size_t i = 0; i < ids.size(); ++i) buf[i] = eval_word(ids[i], w, &v);
            ++into[buf];
        };
        if (workers <= 1 || f == Family::involutions) {
            for_each_word(f, n, [&](const GenWord& w) { tally(parts[0], w, vals); }, opts);
        } else {
            auto ps = parents(f, n, opts);
            parallel_chunks(ps.size(), workers, [&](unsigned t, std::size_t b, std::size_t e) {
                std::vector<int> buf(ids.size());
                for (std::size_t i = b; i < e; ++i)
                    extend(f, n, static_cast<int>(n), ps[i], opts,
                           [&](const GenWord& c) { tally(parts[t], c, buf); });
            });
        }
    }
    for (std::size_t t = 1; t < parts.size(); ++t) merge(parts[0], parts[t]);
    return {counts_to_poly(parts[0], stats), f, n, stats};
}

std::vector<StatBinding> parse_stat_bindings(std::string_view text) {
    std::vector<StatBinding> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t end = text.find(',', i);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(i, end - i);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty()) throw ParseError("empty statistic binding", i);
        auto colon = item.find(':');
        std::string name(item.substr(0, colon));
        std::string var = colon == std::string_view::npos ? "x" : std::string(item.substr(colon + 1));
        if (!VarId::is_valid(var)) throw ParseError("invalid variable '" + var + "'", i);
        out.emplace_back(name, VarId(var));
        i = end + 1;
    }
    return out;
}

nlohmann::json to_json(const StatDistribution& d) {
    nlohmann::json stats = nlohmann::json::array();
    for (const auto& [name, var] : d.stats) stats.push_back({{"stat", name}, {"var", var.name()}});
    return {{"family", std::string(to_string(d.family))},
            {"n", d.n},
            {"stats", stats},
            {"text", d.polynomial.to_string()},
            {"polynomial", to_json(d.polynomial)}};
}

}  // namespace gg
