#include "gammagrammar/recurtab.hpp"

#include <functional>
#include <sstream>

#include "gammagrammar/error.hpp"
#include "gammagrammar/grammar.hpp"

namespace gg {

namespace {

using Entries = std::map<std::pair<int, int>, Integer>;
using Get = std::function<Integer(int, int)>;
using Rule = std::function<Integer(int, int, const Get&)>;

Get reader(const Entries& e) {
    return [&e](int i, int j) -> Integer {
        auto it = e.find({i, j});
        return it == e.end() ? Integer(0) : it->second;
    };
}

// Applies rule over a box large enough to hold every nonzero entry reachable from prev.
Entries step(const Entries& prev, int reach, const Rule& rule) {
    int mi = 0, mj = 0;
    for (const auto& [k, v] : prev) {
        mi = std::max(mi, k.first);
        mj = std::max(mj, k.second);
    }
    Entries out;
    Get g = reader(prev);
    for (int i = 0; i <= mi + reach; ++i)
        for (int j = 0; j <= mj + reach; ++j) {
            Integer v = rule(i, j, g);
            if (v != 0) out[{i, j}] = v;
        }
    return out;
}

CoefficientTable make(std::string name, unsigned n, bool two_dim, Entries e) {
    CoefficientTable t;
    t.name = std::move(name);
    t.n = n;
    t.two_dim = two_dim;
    t.entries = std::move(e);
    return t;
}

void require_positive(unsigned n, const char* name) {
    if (n < 1) throw Error(std::string("table ") + name + " needs n >= 1");
}

Integer I(long long v) { return Integer(v); }

}  // namespace

Integer CoefficientTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Integer(0) : it->second;
}

Integer CoefficientTable::sum() const {
    Integer s = 0;
    for (const auto& [k, v] : entries) s += v;
    return s;
}

Polynomial CoefficientTable::polynomial(const VarId& x, const VarId& y) const {
    Polynomial p;
    for (const auto& [k, v] : entries)
        p.add_term(two_dim ? Monomial::from_pairs({{x, k.first}, {y, k.second}}) : Monomial::var(x, k.first), v);
    return p;
}

CoefficientTable CoefficientTable::from_polynomial(std::string name, unsigned n, bool two_dim, const Polynomial& p,
                                                   const VarId& x, const VarId& y) {
    Entries e;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, ex] : m.exponents())
            if (v != x && (!two_dim || v != y)) throw UnknownVariable("table: unexpected variable " + v.name());
        e[{m.exponent(x), two_dim ? m.exponent(y) : 0}] = c;
    }
    return make(std::move(name), n, two_dim, std::move(e));
}

CoefficientTable table_a(unsigned n) {
    require_positive(n, "a");
    Entries e{{{1, 0}, 1}};
    for (unsigned m = 2; m <= n; ++m) {
        long long N = m;
        e = step(e, 1, [&](int k, int j, const Get& a) -> Integer {
            if (j != 0) return 0;
            return I(k) * a(k, 0) + I(2 * N - 4 * k + 4) * a(k - 1, 0);
        });
    }
    return make("a", n, false, std::move(e));
}

CoefficientTable table_g(unsigned n) {
    Entries e{{{0, 0}, 1}};
    if (n >= 1) e = {{{1, 0}, 1}};
    for (unsigned m = 1; m < n; ++m) {
        long long N = m;
        e = step(e, 2, [&](int i, int j, const Get& g) -> Integer {
            return g(i - 1, j) + I(4 * (1 + i)) * g(i + 1, j - 1) + I(2 * j) * g(i, j) +
                   I(4 * (N + 2 - i - 2 * j)) * g(i, j - 1);
        });
    }
    return make("g", n, true, std::move(e));
}

CoefficientTable table_gamma_stirling(unsigned n) {
    require_positive(n, "gamma-stirling");
    Entries e{{{1, 1}, 1}};
    for (unsigned m = 1; m < n; ++m) {
        long long N = m;
        e = step(e, 2, [&](int i, int j, const Get& g) -> Integer {
            return I(i) * g(i, j - 1) + I(j) * g(i - 1, j) + I(2 * (2 * N + 4 - i - 2 * j)) * g(i - 1, j - 1);
        });
    }
    return make("gamma-stirling", n, true, std::move(e));
}

namespace {

Entries l_from_h(const Entries& h, long long N) {
    return step(h, 3, [&](int i, int j, const Get& g) -> Integer {
        return 2 * g(i - 2, j - 1) + I(i) * g(i, j - 2) + I(j - 1) * g(i - 1, j - 1) +
               I(2 * (3 * N + 2 - i - 2 * j)) * g(i - 1, j - 2);
    });
}

Entries h_from_l(const Entries& l, long long N) {
    return step(l, 1, [&](int i, int j, const Get& g) -> Integer {
        return I(i + 1) * g(i + 1, j) + I(j + 1) * g(i, j + 1) + I(2 * (3 * N + 1 - i - 2 * j)) * g(i, j);
    });
}

Entries s_from_t(const Entries& t, long long N) {
    return step(t, 2, [&](int i, int j, const Get& g) -> Integer {
        return I(i) * g(i, j - 1) + I(j) * g(i - 1, j) + I(2 * (3 * N + 2 - i - 2 * j)) * g(i - 1, j - 1);
    });
}

Entries t_from_s(const Entries& s, long long N) {
    return step(s, 2, [&](int i, int j, const Get& g) -> Integer {
        return I(i + 1) * g(i + 1, j - 1) + I(j) * g(i, j) + I(2 * (3 * N + 3 - i - 2 * j)) * g(i, j - 1);
    });
}

}  // namespace

std::pair<CoefficientTable, CoefficientTable> tables_h_l(unsigned n) {
    require_positive(n, "h-l");
    Entries h{{{0, 0}, 1}};
    Entries l = l_from_h(h, 1);
    for (unsigned m = 1; m < n; ++m) {
        h = h_from_l(l, m);
        l = l_from_h(h, m + 1);
    }
    return {make("h", n, true, std::move(h)), make("l", n, true, std::move(l))};
}

CoefficientTable table_l_standalone(unsigned n) {
    require_positive(n, "l-standalone");
    Entries e{{{2, 1}, 2}};
    for (unsigned m = 1; m < n; ++m) {
        long long N = m;
        e = step(e, 3, [&](int i, int j, const Get& l) -> Integer {
            long long A = 3 * N + 5 - i - 2 * j;
            return I(i * (i + 1)) * l(i + 1, j - 2) + I(2 * i * (j - 1)) * l(i, j - 1) +
                   I(j * (j - 1)) * l(i - 1, j) + I(2 * j) * l(i - 2, j) + I(4 * i * A) * l(i, j - 2) +
                   I(4 * A) * l(i - 2, j - 1) + I(4 * (3 * N + 6 - i - 2 * j) * A) * l(i - 1, j - 2) +
                   I(2 * ((2 * j - 2) * (3 * N + 4 - i - 2 * j) + i + j - 2)) * l(i - 1, j - 1);
        });
    }
    return make("l", n, true, std::move(e));
}

std::pair<CoefficientTable, CoefficientTable> tables_s_t(unsigned n) {
    require_positive(n, "s-t");
    Entries t{{{0, 1}, 1}};
    Entries s = s_from_t(t, 1);
    for (unsigned m = 1; m < n; ++m) {
        t = t_from_s(s, m);
        s = s_from_t(t, m + 1);
    }
    return {make("s", n, true, std::move(s)), make("t", n, true, std::move(t))};
}

CoefficientTable table_s_standalone(unsigned n) {
    Entries e{{{1, 0}, 1}};
    for (unsigned m = 0; m < n; ++m) {
        long long N = m;
        e = step(e, 3, [&](int i, int j, const Get& s) -> Integer {
            long long A = 3 * N + 5 - i - 2 * j;
            return I(i * (i + 1)) * s(i + 1, j - 2) + I(i * (2 * j - 1)) * s(i, j - 1) + I(4 * i * A) * s(i, j - 2) +
                   I(j * j) * s(i - 1, j) +
                   I(4 * (j - 1) * (3 * N + 4 - i - 2 * j) + 6 * N + 6 - 2 * i - 2 * j) * s(i - 1, j - 1) +
                   I(4 * (3 * N + 6 - i - 2 * j) * A) * s(i - 1, j - 2);
        });
    }
    return make("s", n, true, std::move(e));
}

CoefficientTable table_b(unsigned n) {
    require_positive(n, "b");
    // D^n(u) = u * sum b(n,k) u^(2k) v^(n-2k)
    Polynomial p = derive_n(preset("typeB-uv"), Polynomial::var("u"), n);
    Entries e;
    for (const auto& [m, c] : p.terms()) {
        int ue = m.exponent("u");
        if (m.exponent("v") != static_cast<int>(n) + 1 - ue || (ue - 1) % 2 != 0)
            throw InternalError("table b: unexpected term " + Polynomial::term(m, c).to_string());
        e[{(ue - 1) / 2, 0}] = c;
    }
    return make("b", n, false, std::move(e));
}

CoefficientTable table_d(unsigned n) {
    require_positive(n, "d");
    // D^n(e) at z=0 is e * sum d(n,k) u^k v^(n-2k)
    Polynomial p = coeff_of(derive_n(preset("derangement-uv"), Polynomial::var("e"), n), "z", 0);
    Entries e;
    for (const auto& [m, c] : p.terms()) {
        int ue = m.exponent("u");
        if (m.exponent("e") != 1 || m.exponent("v") != static_cast<int>(n) - 2 * ue)
            throw InternalError("table d: unexpected term " + Polynomial::term(m, c).to_string());
        e[{ue, 0}] = c;
    }
    return make("d", n, false, std::move(e));
}

CoefficientTable table_eulerian(unsigned n) {
    require_positive(n, "eulerian");
    Entries e{{{1, 0}, 1}};
    for (unsigned m = 1; m < n; ++m) {
        long long N = m;
        e = step(e, 1, [&](int i, int j, const Get& E) -> Integer {
            if (j != 0) return 0;
            return I(i) * E(i, 0) + I(N + 2 - i) * E(i - 1, 0);
        });
    }
    return make("eulerian", n, false, std::move(e));
}

CoefficientTable table_eulerian_b(unsigned n) {
    Entries e{{{0, 0}, 1}};
    for (unsigned m = 1; m <= n; ++m) {
        long long N = m;
        e = step(e, 1, [&](int k, int j, const Get& B) -> Integer {
            if (j != 0) return 0;
            return I(2 * k + 1) * B(k, 0) + I(2 * N - 2 * k + 1) * B(k - 1, 0);
        });
    }
    return make("eulerian-B", n, false, std::move(e));
}

std::vector<std::string> table_names() {
    return {"a", "b", "d", "g", "gamma-stirling", "h", "l", "l-standalone", "s", "t", "s-standalone",
            "eulerian", "eulerian-B"};
}

CoefficientTable table_by_name(const std::string& name, unsigned n) {
    if (name == "a") return table_a(n);
    if (name == "b") return table_b(n);
    if (name == "d") return table_d(n);
    if (name == "g") return table_g(n);
    if (name == "gamma-stirling") return table_gamma_stirling(n);
    if (name == "h") return tables_h_l(n).first;
    if (name == "l") return tables_h_l(n).second;
    if (name == "l-standalone") return table_l_standalone(n);
    if (name == "s") return tables_s_t(n).first;
    if (name == "t") return tables_s_t(n).second;
    if (name == "s-standalone") return table_s_standalone(n);
    if (name == "eulerian") return table_eulerian(n);
    if (name == "eulerian-B") return table_eulerian_b(n);
    throw UnknownRecurrence("unknown table: " + name);
}

bool leibniz_corollary_check(unsigned n) {
    auto binom = [](unsigned a, unsigned b) {
        Integer r = 1;
        for (unsigned t = 1; t <= b; ++t) r = r * (a - b + t) / t;
        return r;
    };
    Polynomial rhs = Polynomial::var("x") * table_g(n).polynomial();
    for (unsigned k = 0; k < n; ++k) {
        Polynomial am = table_a(n - k).polynomial("y");
        rhs += Polynomial(binom(n, k) * (Integer(1) << (n + 1 - k))) * table_g(k).polynomial() * am;
    }
    return rhs == table_g(n + 1).polynomial();
}

bool polyform_recurrence_check(const std::string& name, unsigned n) {
    const Polynomial x = Polynomial::var("x"), y = Polynomial::var("y");
    auto op = [&](const Polynomial& f, const Polynomial& a, const Polynomial& bx, const Polynomial& by) {
        return a * f + bx * partial(f, "x") + by * partial(f, "y");
    };
    if (name == "g") {
        for (unsigned m = 1; m <= n; ++m) {
            Polynomial g = table_g(m).polynomial();
            long long M = m;
            Polynomial rhs = op(g, x + Polynomial(4 * M) * y, 4 * y * (1 - x), 2 * y * (1 - 4 * y));
            if (rhs != table_g(m + 1).polynomial()) return false;
        }
        return true;
    }
    if (name == "gamma-stirling") {
        for (unsigned m = 1; m <= n; ++m) {
            Polynomial g = table_gamma_stirling(m).polynomial();
            long long M = m;
            Polynomial rhs = op(g, Polynomial(4 * M + 2) * x * y, x * y * (1 - 2 * x), x * y * (1 - 4 * y));
            if (rhs != table_gamma_stirling(m + 1).polynomial()) return false;
        }
        return true;
    }
    if (name == "h-l") {
        for (unsigned m = 1; m <= n; ++m) {
            auto [h, l] = tables_h_l(m);
            long long M = m;
            Polynomial hp = h.polynomial(), lp = l.polynomial();
            Polynomial lr = op(hp, x * y * (Polynomial(6 * M) * y - 6 * y + 2 * x), x * y * y * (1 - 2 * x),
                               x * y * y * (1 - 4 * y));
            if (lr != lp) return false;
            Polynomial hr = op(lp, Polynomial(6 * M + 2), 1 - 2 * x, 1 - 4 * y);
            if (hr != tables_h_l(m + 1).first.polynomial()) return false;
        }
        return true;
    }
    if (name == "s-t") {
        for (unsigned m = 1; m <= n; ++m) {
            auto [s, t] = tables_s_t(m);
            long long M = m;
            Polynomial sp = s.polynomial(), tp = t.polynomial();
            Polynomial sr = op(tp, Polynomial(2 * (3 * M - 1)) * x * y, x * y * (1 - 2 * x), x * y * (1 - 4 * y));
            if (sr != sp) return false;
            Polynomial tr = op(sp, Polynomial(2 * (3 * M + 1)) * y, y * (1 - 2 * x), y * (1 - 4 * y));
            if (tr != tables_s_t(m + 1).second.polynomial()) return false;
        }
        return true;
    }
    throw UnknownRecurrence("unknown polynomial recurrence: " + name);
}

std::string to_tsv(const CoefficientTable& t) {
    std::ostringstream os;
    os << (t.two_dim ? "i\tj\tvalue\n" : "k\tvalue\n");
    for (const auto& [k, v] : t.entries) {
        os << k.first << '\t';
        if (t.two_dim) os << k.second << '\t';
        os << v.str() << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const CoefficientTable& t) {
    auto arr = nlohmann::json::array();
    for (const auto& [k, v] : t.entries) {
        if (t.two_dim)
            arr.push_back({{"i", k.first}, {"j", k.second}, {"value", integer_to_json(v)}});
        else
            arr.push_back({{"k", k.first}, {"value", integer_to_json(v)}});
    }
    return {{"name", t.name}, {"n", t.n}, {"entries", arr}, {"sum", integer_to_json(t.sum())}};
}

}  // namespace gg
