#include "gammagrammar/grammar.hpp"

#include <sstream>

#include "gammagrammar/error.hpp"

namespace gg {

Grammar::Grammar(std::string name, Rules rules) : name_(std::move(name)), rules_(std::move(rules)) {}

const Polynomial& Grammar::rule(const VarId& v) const {
    static const Polynomial zero;
    auto it = rules_.find(v);
    return it == rules_.end() ? zero : it->second;
}

std::set<VarId> Grammar::variables() const {
    std::set<VarId> vars;
    for (const auto& [v, rhs] : rules_) {
        vars.insert(v);
        auto rv = rhs.variables();
        vars.insert(rv.begin(), rv.end());
    }
    return vars;
}

Grammar Grammar::parse(std::string_view text, std::string name) {
    Rules rules;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        std::size_t offset = line_start;
        line_start = line_end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

        auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected 'var -> polynomial'", offset);
        std::string_view lhs = line.substr(0, arrow);
        auto b = lhs.find_first_not_of(" \t");
        auto e = lhs.find_last_not_of(" \t");
        if (b == std::string_view::npos) throw ParseError("missing variable before '->'", offset);
        std::string var_name(lhs.substr(b, e - b + 1));
        if (!VarId::is_valid(var_name)) throw ParseError("invalid variable '" + var_name + "'", offset + b);
        Polynomial rhs;
        try {
            rhs = Polynomial::parse(line.substr(arrow + 2));
        } catch (const ParseError& err) {
            throw ParseError("bad right-hand side for " + var_name, offset + arrow + 2 + err.offset());
        }
        if (!rules.emplace(VarId(var_name), std::move(rhs)).second)
            throw ParseError("duplicate rule for " + var_name, offset);
    }
    return Grammar(std::move(name), std::move(rules));
}

std::string Grammar::to_string() const {
    std::ostringstream out;
    for (const auto& [v, rhs] : rules_) out << v.name() << " -> " << rhs.to_string() << '\n';
    return out.str();
}

Polynomial derive(const Grammar& g, const Polynomial& p) {
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        // Product rule: D(prod v^k) = sum_v k v^{k-1} G(v) prod_{w != v} w^k.
        for (const auto& [v, e] : m.exponents()) {
            const Polynomial& rhs = g.rule(v);
            if (rhs.is_zero()) continue;
            Monomial rest = m * Monomial::var(v, -1);
            Integer factor = c * e;
            for (const auto& [rm, rc] : rhs.terms()) result.add_term(rm * rest, rc * factor);
        }
    }
    return result;
}

Polynomial derive_n(const Grammar& g, Polynomial p, unsigned n) {
    for (unsigned i = 0; i < n; ++i) p = derive(g, p);
    return p;
}

Polynomial derive_sequence(std::span<const Grammar> gs, Polynomial p, unsigned steps) {
    if (gs.empty()) throw Error("derive_sequence needs at least one grammar");
    for (unsigned i = 0; i < steps; ++i) p = derive(gs[i % gs.size()], p);
    return p;
}

Polynomial derive_alternating(std::span<const Grammar> gs, Polynomial p, unsigned rounds) {
    return derive_sequence(gs, std::move(p), rounds * static_cast<unsigned>(gs.size()));
}

namespace {

void require_known(const Polynomial& p, const std::set<VarId>& known, const std::string& where) {
    for (const auto& v : p.variables())
        if (!known.count(v)) throw UnknownVariable("unknown variable " + v.name() + " in " + where);
}

}  // namespace

TransformCheck verify_grammar_transform(const Grammar& old_g, const VariableDefs& defs,
                                        const Grammar& new_g) {
    std::set<VarId> old_vars = old_g.variables();
    std::set<VarId> all_vars = old_vars;
    for (const auto& [w, d] : defs) {
        require_known(d, old_vars, "definition of " + w.name());
        all_vars.insert(w);
    }
    for (const auto& [w, d] : defs) {
        require_known(new_g.rule(w), all_vars, "new rule for " + w.name());
        Polynomial lhs = derive(old_g, d);
        Polynomial rhs = substitute(new_g.rule(w), defs);
        if (lhs != rhs) return {false, w, std::move(lhs), std::move(rhs)};
    }
    return {};
}

CommuteCheck verify_transform_commutes(std::span<const Grammar> old_gs, const VariableDefs& defs,
                                       std::span<const Grammar> new_gs, unsigned max_steps) {
    for (const auto& [w, d] : defs) {
        Polynomial in_new = Polynomial::var(w);
        Polynomial in_old = d;
        for (unsigned k = 0; k <= max_steps; ++k) {
            Polynomial expanded = substitute(in_new, defs);
            if (expanded != in_old) return {false, w, k, std::move(in_old), std::move(expanded)};
            if (k == max_steps) break;
            in_new = derive(new_gs[k % new_gs.size()], in_new);
            in_old = derive(old_gs[k % old_gs.size()], in_old);
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Presets

namespace {

Grammar make(std::string name, std::initializer_list<std::pair<const char*, const char*>> rules) {
    Grammar::Rules r;
    for (const auto& [v, rhs] : rules) r.emplace(VarId(v), Polynomial::parse(rhs));
    return Grammar(std::move(name), std::move(r));
}

const std::map<std::string, Grammar, std::less<>>& presets() {
    static const std::map<std::string, Grammar, std::less<>> table = [] {
        std::map<std::string, Grammar, std::less<>> t;
        auto add = [&t](Grammar g) { t.emplace(g.name(), std::move(g)); };
        add(make("eulerian", {{"x", "x*y"}, {"y", "x*y"}}));
        add(make("eulerian-uv", {{"x", "u"}, {"u", "u*v"}, {"v", "2*u"}}));
        add(make("typeB", {{"x", "x*y^2"}, {"y", "x^2*y"}}));
        add(make("typeB-uv", {{"u", "u*v"}, {"v", "4*u^2"}}));
        add(make("derangement", {{"x", "x*y"}, {"y", "x*y"}, {"z", "x*y"}, {"e", "e*z"}}));
        add(make("derangement-uv", {{"e", "e*z"}, {"z", "u"}, {"u", "u*v"}, {"v", "2*u"}}));
        add(make("dB", {{"x", "x*y^2"}, {"y", "x^2*y"}, {"z", "x^2*y^2*z^-3"}, {"e", "e*z^4"}}));
        add(make("dB-uv", {{"s", "s*t"}, {"t", "4*u^2"}, {"u", "u*v"}, {"v", "4*u^2"}}));
        add(make("stirling", {{"x", "x*y*z"}, {"y", "x*y*z"}, {"z", "x*y*z"}}));
        add(make("stirling-uv", {{"w", "w*u"}, {"u", "w*u*v"}, {"v", "2*w*u"}}));
        add(make("legendre-1", {{"x", "u*v"}, {"y", "u*v"}, {"z", "u*v"}}));
        add(make("legendre-2", {{"x", "x^2*y^2*z*u^-1*v^-1"},
                                {"y", "x^2*y^2*z*u^-1*v^-1"},
                                {"z", "x^2*y^2*z*u^-1*v^-1"},
                                {"u", "x*y*z^2*v^-1"},
                                {"v", "x*y*z^2*u^-1"}}));
        add(make("legendre-uv-1", {{"x", "u*v"}, {"z", "u*v"}, {"a", "2*u*v"}, {"b", "a*u*v"}}));
        add(make("legendre-uv-2", {{"x", "z*b^2*u^-1*v^-1"},
                                   {"y", "z*b^2*u^-1*v^-1"},
                                   {"z", "z*b^2*u^-1*v^-1"},
                                   {"u", "z^2*b*v^-1"},
                                   {"v", "z^2*b*u^-1"},
                                   {"a", "2*z*b^2*u^-1*v^-1"},
                                   {"b", "z*a*b^2*u^-1*v^-1"}}));
        add(make("jacobi-1", {{"x", "x*y"}, {"y", "x*y"}, {"z", "x*y"}}));
        add(make("jacobi-2", {{"x", "x*y*z"}, {"y", "x*y*z"}, {"z", "x*y*z"}}));
        add(make("jacobi-uv-1", {{"a", "c"}, {"b", "2*c"}, {"c", "b*c"}}));
        add(make("jacobi-uv-2", {{"a", "a*c"}, {"b", "2*a*c"}, {"c", "a*b*c"}}));
        return t;
    }();
    return table;
}

VariableDefs defs_of(std::initializer_list<std::pair<const char*, const char*>> items) {
    VariableDefs d;
    for (const auto& [v, p] : items) d.emplace(VarId(v), Polynomial::parse(p));
    return d;
}

}  // namespace

const Grammar& preset(std::string_view name) {
    const auto& t = presets();
    auto it = t.find(name);
    if (it == t.end()) throw UnknownGrammar("unknown grammar preset '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [n, g] : presets()) names.push_back(n);
    return names;
}

const std::vector<GrammarTransform>& transform_catalog() {
    static const std::vector<GrammarTransform> catalog = {
        {"eulerian", {"eulerian"}, {"eulerian-uv"}, defs_of({{"x", "x"}, {"u", "x*y"}, {"v", "x + y"}})},
        {"typeB", {"typeB"}, {"typeB-uv"}, defs_of({{"u", "x*y"}, {"v", "x^2 + y^2"}})},
        {"derangement",
         {"derangement"},
         {"derangement-uv"},
         defs_of({{"e", "e"}, {"z", "z"}, {"u", "x*y"}, {"v", "x + y"}})},
        {"dB", {"dB"}, {"dB-uv"}, defs_of({{"s", "e"}, {"t", "z^4"}, {"u", "x*y"}, {"v", "x^2 + y^2"}})},
        {"stirling", {"stirling"}, {"stirling-uv"}, defs_of({{"w", "x"}, {"u", "y*z"}, {"v", "y + z"}})},
        {"legendre",
         {"legendre-1", "legendre-2"},
         {"legendre-uv-1", "legendre-uv-2"},
         defs_of({{"x", "x"}, {"z", "z"}, {"u", "u"}, {"v", "v"}, {"a", "x + y"}, {"b", "x*y"}})},
        {"jacobi", {"jacobi-1", "jacobi-2"}, {"jacobi-uv-1", "jacobi-uv-2"},
         defs_of({{"a", "z"}, {"b", "x + y"}, {"c", "x*y"}})},
    };
    return catalog;
}

}  // namespace gg
