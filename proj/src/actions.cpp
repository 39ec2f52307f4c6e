#include "gammagrammar/actions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

#include "gammagrammar/error.hpp"

namespace gg {

CycleForm fs_typeB(const CycleForm& pi, int letter) {
    int a = std::abs(letter);
    for (std::size_t ci = 0; ci < pi.cycles.size(); ++ci) {
        const auto& cyc = pi.cycles[ci];
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            if (std::abs(cyc[t]) != a) continue;
            std::size_t L = cyc.size(), k = t + 1;  // 1-based
            if (k == L) return pi;
            auto c = [&](std::size_t i) {
                return i == 0 ? std::numeric_limits<long>::max() : static_cast<long>(cyc[i - 1]);
            };
            long ck = c(k);
            CycleForm out = pi;
            auto& nc = out.cycles[ci];
            if (c(k - 1) < ck && ck < c(k + 1)) {
                std::size_t j = k - 1;
                while (!(c(j) > ck && ck > c(j + 1))) --j;
                nc.erase(nc.begin() + static_cast<std::ptrdiff_t>(k - 1));
                nc.insert(nc.begin() + static_cast<std::ptrdiff_t>(j), cyc[k - 1]);
                return out;
            }
            if (c(k - 1) > ck && ck > c(k + 1)) {
                std::size_t j = k + 1;
                while (!(c(j) < ck && ck < c(j + 1))) ++j;
                nc.erase(nc.begin() + static_cast<std::ptrdiff_t>(k - 1));
                nc.insert(nc.begin() + static_cast<std::ptrdiff_t>(j - 1), cyc[k - 1]);
                return out;
            }
            return pi;
        }
    }
    throw MissingLetter("letter " + std::to_string(letter) + " not in the cycle form");
}

namespace {

// Ranks with sentinels at 0 and L+1.
std::vector<int> padded_ranks(const GenWord& w) {
    std::vector<int> r(w.size() + 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) r[i + 1] = letter_rank(w.family, w[i]);
    return r;
}

void check_position(const GenWord& w, std::size_t k) {
    if (k < 1 || k > w.size())
        throw PositionOutOfRange("position " + std::to_string(k) + " outside 1.." + std::to_string(w.size()));
}

// Moves the letter at 1-based position k so that it lands at 0-based index `to` of the
// word with that letter removed.
GenWord move_letter(const GenWord& w, std::size_t k, std::size_t to) {
    GenWord out = w;
    GenLetter l = out.letters[k - 1];
    out.letters.erase(out.letters.begin() + static_cast<std::ptrdiff_t>(k - 1));
    out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(to), l);
    return out;
}

std::size_t first_position(const GenWord& w, GenLetter l) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == l) return i + 1;
    throw MissingLetter("letter " + std::string(l.barred ? "b" : "") + std::to_string(l.value) + " not in word");
}

}  // namespace

GenWord fs_stirling_at(const GenWord& w, std::size_t k) {
    check_position(w, k);
    auto r = padded_ranks(w);
    if (r[k - 1] < r[k] && r[k] < r[k + 1]) {
        std::size_t second = k + 1;
        while (second <= w.size() && !(w[second - 1] == w[k - 1])) ++second;
        if (second > w.size()) throw InternalError("double ascent without a second copy");
        return move_letter(w, k, second - 2);
    }
    if (r[k - 1] > r[k] && r[k] == r[k + 1]) {
        std::size_t j = k - 1;
        while (r[j] >= r[k]) --j;
        return move_letter(w, k, j);
    }
    return w;
}

GenWord fs_stirling(const GenWord& w, int letter) { return fs_stirling_at(w, first_position(w, {letter, false})); }

GenWord fs_jacobi_at(const GenWord& w, std::size_t k) {
    check_position(w, k);
    auto r = padded_ranks(w);
    std::size_t L = w.size();
    if (r[k - 1] < r[k] && r[k] < r[k + 1]) {
        std::size_t j = k + 1;
        while (j <= L && r[j] > r[k]) ++j;
        return move_letter(w, k, j - 2);
    }
    bool desp = r[k - 1] > r[k] && r[k] == r[k + 1];
    bool barred_ddes = w[k - 1].barred && r[k - 1] > r[k] && r[k] > r[k + 1];
    if (desp || barred_ddes) {
        std::size_t j = k - 1;
        while (r[j] >= r[k]) --j;
        return move_letter(w, k, j);
    }
    return w;
}

GenWord fs_jacobi(const GenWord& w, GenLetter letter) { return fs_jacobi_at(w, first_position(w, letter)); }

GenWord fs_plain(const GenWord& w, int letter) {
    std::size_t k = first_position(w, {letter, false});
    auto r = padded_ranks(w);
    std::size_t L = w.size();
    bool dasc = r[k - 1] < r[k] && r[k] < r[k + 1];
    bool ddes = r[k - 1] > r[k] && r[k] > r[k + 1];
    if (!dasc && !ddes) return w;
    // w = w1 w2 x w4 w5 with w2, w4 the maximal runs of larger letters next to x
    std::size_t left = k, right = k;
    while (left > 1 && r[left - 1] > r[k]) --left;
    while (right < L && r[right + 1] > r[k]) ++right;
    GenWord out{w.family, {}};
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(left - 1));
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(k),
                       w.letters.begin() + static_cast<std::ptrdiff_t>(right));
    out.letters.push_back(w[k - 1]);
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(left - 1),
                       w.letters.begin() + static_cast<std::ptrdiff_t>(k - 1));
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(right), w.letters.end());
    return out;
}

GenWord insert_pair(const GenWord& w, int value, std::size_t gap) {
    if (gap > w.size()) throw InvalidGap("gap " + std::to_string(gap) + " outside 0.." + std::to_string(w.size()));
    GenWord out = w;
    out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(gap), 2, GenLetter{value, false});
    return out;
}

GenWord delete_pair(const GenWord& w, int value) {
    GenWord out = w;
    auto n = std::erase(out.letters, GenLetter{value, false});
    if (n != 2) throw MissingLetter("pair " + std::to_string(value) + " not in word");
    return out;
}

GenWord insert_barred(const GenWord& w, int value, std::size_t gap) {
    if (gap > w.size()) throw InvalidGap("gap " + std::to_string(gap) + " outside 0.." + std::to_string(w.size()));
    GenWord out = w;
    out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(gap), GenLetter{value, true});
    return out;
}

GenWord delete_barred(const GenWord& w, int value) {
    GenWord out = w;
    if (std::erase(out.letters, GenLetter{value, true}) != 1)
        throw MissingLetter("barred " + std::to_string(value) + " not in word");
    return out;
}

// Orbits -------------------------------------------------------------------------

std::vector<StatBinding> orbit_weight_stats(Family f) {
    switch (f) {
        case Family::perm:
            return {{"des", "x"}};
        case Family::typeB_derangements:
            return {{"wexc", "x"}, {"aexc", "y"}, {"single", "z"}};
        case Family::stirling:
        case Family::jacobi:
        case Family::jacobi_deleted:
            return {{"asc", "x"}, {"des", "y"}, {"plat", "z"}};
        default:
            throw UnsupportedFamily("no group action on " + std::string(to_string(f)));
    }
}

std::vector<std::string> orbit_rep_stats(Family f) {
    switch (f) {
        case Family::perm:
            return {"ddes", "des", "peak"};
        case Family::typeB_derangements:
            return {"cda", "single", "wexc"};
        case Family::stirling:
            return {"desp", "des", "laplat"};
        case Family::jacobi:
        case Family::jacobi_deleted:
            return {"bddes", "desp", "ubdes", "expk"};
        default:
            throw UnsupportedFamily("no group action on " + std::string(to_string(f)));
    }
}

namespace {

// Generic orbit search over objects indexed 0..N-1.
template <class Obj>
std::vector<OrbitReport> orbits(const std::vector<Obj>& objs, const std::function<std::string(const Obj&)>& key,
                                const std::function<std::vector<Obj>(const Obj&)>& neighbours,
                                const std::function<StatValues(const Obj&, const std::vector<std::string>&)>& stats,
                                const std::vector<StatBinding>& weight_stats, const std::vector<std::string>& rep_names,
                                std::size_t movable) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(objs.size() * 2);
    for (std::size_t i = 0; i < objs.size(); ++i) index.emplace(key(objs[i]), i);
    std::vector<bool> seen(objs.size(), false);
    std::vector<std::string> weight_names;
    for (const auto& b : weight_stats) weight_names.push_back(b.first);

    std::vector<OrbitReport> out;
    for (std::size_t s = 0; s < objs.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> members{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& nb : neighbours(objs[cur])) {
                auto it = index.find(key(nb));
                if (it == index.end()) throw InternalError("action left the family: " + key(nb));
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    members.push_back(it->second);
                    stack.push_back(it->second);
                }
            }
        }
        std::sort(members.begin(), members.end());
        OrbitReport rep;
        rep.orbit_size = members.size();
        int reps_found = 0;
        for (std::size_t m : members) {
            const Obj& o = objs[m];
            rep.members.push_back(key(o));
            auto ws = stats(o, weight_names);
            std::vector<Monomial::Entry> e;
            for (const auto& [name, var] : weight_stats) e.emplace_back(var, ws[name]);
            rep.weight.add_term(Monomial::from_pairs(std::move(e)), 1);
            auto rs = stats(o, rep_names);
            bool zero = true;
            for (std::size_t i = 0; i < movable; ++i) zero = zero && rs[rep_names[i]] == 0;
            if (zero) {
                ++reps_found;
                rep.representative = key(o);
                rep.rep_stats = rs;
            }
        }
        if (reps_found != 1)
            throw InternalError("orbit of " + rep.members.front() + " has " + std::to_string(reps_found) +
                                " representatives");
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

std::vector<OrbitReport> orbit_decompose(Family f, unsigned n, const GenOptions& opts) {
    auto weight = orbit_weight_stats(f);
    auto rep_names = orbit_rep_stats(f);
    int top = static_cast<int>(n);

    if (f == Family::typeB_derangements) {
        auto objs = generate_signed(f, n, opts);
        std::function<std::string(const SignedPerm&)> key = [](const SignedPerm& p) { return to_string(p); };
        std::function<std::vector<SignedPerm>(const SignedPerm&)> nb = [top](const SignedPerm& p) {
            std::vector<SignedPerm> v;
            CycleForm c = to_cycle_form(p);
            for (int m = 1; m <= top; ++m) v.push_back(from_cycle_form(fs_typeB(c, m)));
            return v;
        };
        std::function<StatValues(const SignedPerm&, const std::vector<std::string>&)> st =
            [](const SignedPerm& p, const std::vector<std::string>& names) { return statistics(p, names); };
        auto out = orbits(objs, key, nb, st, weight, rep_names, 1);
        for (auto& r : out) {
            // report cycle notation, which is where the action lives
            r.representative = to_string(to_cycle_form(parse_signed(r.representative)));
            for (auto& m : r.members) m = to_string(to_cycle_form(parse_signed(m)));
        }
        return out;
    }

    std::function<std::vector<GenWord>(const GenWord&)> nb;
    std::size_t movable = 1;
    switch (f) {
        case Family::perm:
            nb = [top](const GenWord& w) {
                std::vector<GenWord> v;
                for (int m = 1; m <= top; ++m) v.push_back(fs_plain(w, m));
                return v;
            };
            break;
        case Family::stirling:
            nb = [top](const GenWord& w) {
                std::vector<GenWord> v;
                for (int m = 1; m <= top; ++m) v.push_back(fs_stirling(w, m));
                return v;
            };
            break;
        case Family::jacobi:
        case Family::jacobi_deleted:
            movable = 2;
            nb = [](const GenWord& w) {
                std::vector<GenWord> v;
                std::vector<GenLetter> letters;
                for (const auto& l : w.letters)
                    if (std::find(letters.begin(), letters.end(), l) == letters.end()) letters.push_back(l);
                for (const auto& l : letters) v.push_back(fs_jacobi(w, l));
                return v;
            };
            break;
        default:
            throw UnsupportedFamily("no group action on " + std::string(to_string(f)));
    }
    auto objs = generate_words(f, n, opts);
    std::function<std::string(const GenWord&)> key = [](const GenWord& w) { return to_string(w); };
    std::function<StatValues(const GenWord&, const std::vector<std::string>&)> st =
        [](const GenWord& w, const std::vector<std::string>& names) { return statistics(w, names); };
    return orbits(objs, key, nb, st, weight, rep_names, movable);
}

nlohmann::json to_json(const OrbitReport& r) {
    return {{"rep", r.representative},
            {"orbit_size", r.orbit_size},
            {"weight_poly", r.weight.to_string()},
            {"rep_stats", r.rep_stats}};
}

}  // namespace gg
