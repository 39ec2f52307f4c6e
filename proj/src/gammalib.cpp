#include "gammagrammar/gammalib.hpp"

#include <functional>

#include "gammagrammar/error.hpp"

namespace gg {

namespace {

// Coefficients c[0..d] of a univariate polynomial; throws if it leaves that range.
std::vector<Integer> dense(const Polynomial& f, const VarId& x, int d) {
    std::vector<Integer> c(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (const auto& [m, coef] : f.terms()) {
        for (const auto& [v, e] : m.exponents())
            if (v != x) throw UnknownVariable("gamma_expand: unexpected variable " + v.name());
        int e = m.exponent(x);
        if (e < 0 || e > d)
            throw NotSymmetric("gamma_expand: term x^" + std::to_string(e) + " outside degree range 0.." +
                               std::to_string(d));
        c[static_cast<std::size_t>(e)] = coef;
    }
    return c;
}

std::vector<Integer> binomial_row(int m) {
    std::vector<Integer> r{1};
    for (int k = 0; k < m; ++k) {
        std::vector<Integer> next(r.size() + 1);
        for (std::size_t t = 0; t < r.size(); ++t) {
            next[t] += r[t];
            next[t + 1] += r[t];
        }
        r = std::move(next);
    }
    return r;
}

}  // namespace

bool GammaVector::nonnegative() const {
    for (const auto& g : gammas)
        if (g < 0) return false;
    return true;
}

GammaVector gamma_expand(const Polynomial& f, int d, const VarId& x) {
    if (d < 0) {
        if (f.is_zero()) return {d, {}};
        throw NotSymmetric("gamma_expand: negative degree " + std::to_string(d));
    }
    auto c = dense(f, x, d);
    for (int k = 0; 2 * k < d; ++k)
        if (c[k] != c[d - k])
            throw NotSymmetric("gamma_expand: coefficient of x^" + std::to_string(k) + " is " + c[k].str() +
                               " but coefficient of x^" + std::to_string(d - k) + " is " + c[d - k].str());
    GammaVector g{d, {}};
    for (int k = 0; 2 * k <= d; ++k) {
        Integer gk = c[k];
        g.gammas.push_back(gk);
        if (gk == 0) continue;
        auto row = binomial_row(d - 2 * k);
        for (std::size_t t = 0; t < row.size(); ++t) c[k + t] -= gk * row[t];
    }
    for (const auto& r : c)
        if (r != 0) throw InternalError("gamma_expand: nonzero remainder");
    return g;
}

Polynomial gamma_reconstruct(const GammaVector& g, const VarId& x) {
    Polynomial out, X = Polynomial::var(x), onex = 1 + X;
    for (std::size_t k = 0; k < g.gammas.size(); ++k)
        out += Polynomial(g.gammas[k]) * pow(X, static_cast<unsigned>(k)) *
               pow(onex, static_cast<unsigned>(g.d - 2 * static_cast<int>(k)));
    return out;
}

GammaVector gamma_expand_xy(const Polynomial& p, int d, const VarId& x, const VarId& y) {
    Polynomial flat;
    for (const auto& [m, coef] : p.terms()) {
        for (const auto& [v, e] : m.exponents())
            if (v != x && v != y) throw UnknownVariable("gamma_expand_xy: unexpected variable " + v.name());
        int a = m.exponent(x), b = m.exponent(y);
        if (a < 0 || b < 0 || a + b != d)
            throw NotHomogeneous("gamma_expand_xy: term " + Polynomial::term(m, coef).to_string() +
                                 " is not of degree " + std::to_string(d));
    }
    for (const auto& [m, coef] : p.terms()) {
        int a = m.exponent(x), b = m.exponent(y);
        Monomial mirror = Monomial::from_pairs({{x, b}, {y, a}});
        if (p.coeff(mirror) != coef)
            throw NotSymmetric("gamma_expand_xy: coefficient of " + Polynomial::term(m).to_string() + " is " +
                               coef.str() + " but coefficient of " + Polynomial::term(mirror).to_string() + " is " +
                               p.coeff(mirror).str());
        flat.add_term(Monomial::var(x, a), coef);
    }
    return gamma_expand(flat, d, x);
}

Polynomial gamma_reconstruct_xy(const GammaVector& g, const VarId& x, const VarId& y) {
    Polynomial out, X = Polynomial::var(x), Y = Polynomial::var(y);
    for (std::size_t j = 0; j < g.gammas.size(); ++j)
        out += Polynomial(g.gammas[j]) * pow(X * Y, static_cast<unsigned>(j)) *
               pow(X + Y, static_cast<unsigned>(g.d - 2 * static_cast<int>(j)));
    return out;
}

PartialGammaExpansion partial_gamma(const Polynomial& p, const VarId& z, const VarId& x, const VarId& y) {
    PartialGammaExpansion e;
    e.z_var = z;
    e.x_var = x;
    e.y_var = y;
    for (const auto& [i, slice] : coeff_slices(p, z)) {
        if (slice.is_zero()) continue;
        int d = slice.terms().begin()->first.total_degree();
        std::string where = " (slice " + z.name() + "^" + std::to_string(i) + ")";
        try {
            e.slices[i] = gamma_expand_xy(slice, d, x, y);
        } catch (const NotHomogeneous& err) {
            throw NotHomogeneous(err.what() + where);
        } catch (const NotSymmetric& err) {
            throw NotSymmetric(err.what() + where);
        } catch (const UnknownVariable& err) {
            throw UnknownVariable(err.what() + where);
        }
        const auto& g = e.slices[i].gammas;
        for (std::size_t j = 0; j < g.size() && e.positive; ++j)
            if (g[j] < 0) {
                e.positive = false;
                e.witness = GammaWitness{i, static_cast<int>(j), g[j]};
            }
    }
    return e;
}

Polynomial reconstruct(const PartialGammaExpansion& e) {
    Polynomial out;
    for (const auto& [i, g] : e.slices)
        out += Polynomial::var(e.z_var, i) * gamma_reconstruct_xy(g, e.x_var, e.y_var);
    return out;
}

ConjectureReport conjecture_check_jsp(unsigned k, unsigned i, const GenOptions& opts) {
    if (i < 1 || i + 1 > k)
        throw Error("conjecture-jsp needs 1 <= i <= k-1, got k=" + std::to_string(k) + " i=" + std::to_string(i));
    check_budget(Family::jacobi_partial, k, opts);
    ConjectureReport r;
    r.k = k;
    r.i = i;
    std::vector<int> chosen;
    std::function<void(int)> walk = [&](int next) {
        if (chosen.size() == i) {
            GenOptions o = opts;
            o.removed_bars = chosen;
            r.distribution +=
                distribution(Family::jacobi_partial, k, {{"asc", "x"}, {"des", "y"}, {"plat", "z"}}, o).polynomial;
            return;
        }
        for (int v = next; v <= static_cast<int>(k); ++v) {
            chosen.push_back(v);
            walk(v + 1);
            chosen.pop_back();
        }
    };
    walk(1);
    Integer total = 0;
    for (const auto& [m, c] : r.distribution.terms()) total += c;
    r.words = static_cast<std::size_t>(total);
    r.expansion = partial_gamma(r.distribution, "z", "x", "y");
    return r;
}

GuoZengReport guo_zeng_check(unsigned n, const GenOptions& opts) {
    check_budget(Family::involutions, n, opts);
    GuoZengReport r;
    r.n = n;
    r.descent_poly = involution_descent_poly(n);
    r.gamma = gamma_expand(r.descent_poly, static_cast<int>(n) - 1);
    return r;
}

nlohmann::json to_json(const GammaVector& g) {
    auto arr = nlohmann::json::array();
    for (const auto& v : g.gammas) arr.push_back(integer_to_json(v));
    return {{"d", g.d}, {"gamma", arr}};
}

nlohmann::json to_json(const PartialGammaExpansion& e) {
    nlohmann::json slices = nlohmann::json::object();
    for (const auto& [i, g] : e.slices) slices[std::to_string(i)] = to_json(g);
    nlohmann::json w = nullptr;
    if (e.witness) w = {{"slice", e.witness->slice}, {"j", e.witness->j}, {"gamma", integer_to_json(e.witness->gamma)}};
    return {{"z_var", e.z_var.name()},
            {"x_var", e.x_var.name()},
            {"y_var", e.y_var.name()},
            {"slices", slices},
            {"positive", e.positive},
            {"witness", w}};
}

nlohmann::json to_json(const ConjectureReport& r) {
    return {{"k", r.k},
            {"i", r.i},
            {"words", r.words},
            {"distribution", r.distribution.to_string()},
            {"expansion", to_json(r.expansion)}};
}

nlohmann::json to_json(const GuoZengReport& r) {
    return {{"n", r.n},
            {"descent_poly", r.descent_poly.to_string()},
            {"gamma", to_json(r.gamma)},
            {"nonnegative", r.gamma.nonnegative()}};
}

}  // namespace gg
